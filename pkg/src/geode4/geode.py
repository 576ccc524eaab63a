"""The Geode array: the factor left after splitting off the first layer.

Writing S for the generating series of all subdivision counts, S - 1
factors as (t2 + t3 + t4 + t5) * G, and the coefficients of G are the
Geode numbers computed here.  Rearranged, that identity pins every Geode
entry down by earlier ones:

    G[m2, m3, m4, m5] = C[m2 + 1, m3, m4, m5]
                        - G[m2 + 1, m3 - 1, m4, m5]
                        - G[m2 + 1, m3, m4 - 1, m5]
                        - G[m2 + 1, m3, m4, m5 - 1]

where a term is dropped when its index would go negative.  Recursing on
(m3, m4, m5) with the triangle slot as the pivot always terminates:
G[m2, 0, 0, 0] = C[m2 + 1, 0, 0, 0].

Two evaluation strategies live here.  ``geode_element`` resolves a single
entry by memoized recursion; good for spot checks and cheap cross
validation.  ``geode_diagonal`` computes H(n) = G[n, n, n, n] by sweeping
quadrilateral slices, which touches each needed cell exactly once and
keeps at most two count slices and two Geode slices alive.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from . import _backend, _py_kernels
from .hypercat import CatalanSlice, hyper_catalan, make_c_slice, make_c_slice0
from .typevec import TypeVector


class GeodeMemo:
    """Memo table for geode_element, reusable across calls.

    ``expansions`` counts recurrence evaluations (table insertions), so a
    caller can assert that a repeated query does no new work.
    """

    __slots__ = ("table", "expansions")

    def __init__(self):
        self.table = {}
        self.expansions = 0

    def __len__(self):
        return len(self.table)

    def __contains__(self, m):
        return TypeVector(*m) in self.table


def _dependencies(m):
    m2, m3, m4, m5 = m
    deps = []
    if m3:
        deps.append(TypeVector(m2 + 1, m3 - 1, m4, m5))
    if m4:
        deps.append(TypeVector(m2 + 1, m3, m4 - 1, m5))
    if m5:
        deps.append(TypeVector(m2 + 1, m3, m4, m5 - 1))
    return deps


def geode_element(m, memo: GeodeMemo | None = None) -> int:
    """One Geode entry by memoized recursion.

    Iterative work stack, so deep chains (depth grows with m3 + m4 + m5)
    cannot hit the interpreter recursion limit.  Pass a shared GeodeMemo
    to amortize across related queries.
    """
    if memo is None:
        memo = GeodeMemo()
    root = TypeVector(*m)
    if min(root) < 0:
        raise ValueError(f"type components must be >= 0, got {tuple(m)}")
    table = memo.table
    stack = [root]
    while stack:
        cur = stack[-1]
        if cur in table:
            stack.pop()
            continue
        deps = _dependencies(cur)
        missing = [d for d in deps if d not in table]
        if missing:
            stack.extend(missing)
            continue
        m2, m3, m4, m5 = cur
        val = hyper_catalan((m2 + 1, m3, m4, m5))
        for d in deps:
            val -= table[d]
        table[cur] = val
        memo.expansions += 1
        stack.pop()
    return table[root]


class GeodeSlice:
    """Square grid of Geode entries at fixed quadrilateral count s.

    Cell (m4, m5) holds G[4n - (s + m4 + m5), s, m4, m5]; same row-major
    layout as CatalanSlice.  Entries are strictly positive.
    """

    __slots__ = ("n", "s", "grid")

    def __init__(self, n: int, s: int, grid: list):
        self.n = n
        self.s = s
        self.grid = grid

    def cell(self, m4: int, m5: int) -> int:
        return self.grid[m4 * (self.n + 1) + m5]

    def type_at(self, m4: int, m5: int) -> TypeVector:
        return TypeVector(4 * self.n - (self.s + m4 + m5), self.s, m4, m5)

    def __eq__(self, other):
        if not isinstance(other, GeodeSlice):
            return NotImplemented
        return (self.n, self.s, self.grid) == (other.n, other.s, other.grid)

    def __repr__(self):
        return f"GeodeSlice(n={self.n}, s={self.s})"


def make_g_slice(
    s: int,
    n: int,
    c_slice: CatalanSlice,
    prev: GeodeSlice | None = None,
    *,
    kernels=None,
    workers: int = 1,
) -> GeodeSlice:
    """Geode slice s from the matching count slice and the slice below.

    The count slice must sit at the same (n, s).  Slice 0 takes no
    predecessor; every later slice requires the Geode slice at s - 1.
    """
    if c_slice.n != n or c_slice.s != s:
        raise ValueError(
            f"count slice mismatch: have (n={c_slice.n}, s={c_slice.s}), need (n={n}, s={s})"
        )
    if s == 0:
        if prev is not None:
            raise ValueError("slice 0 takes no predecessor")
        prev_grid = None
    else:
        if prev is None or prev.s != s - 1 or prev.n != n:
            raise ValueError(f"need Geode slice (n={n}, s={s - 1}) as predecessor")
        prev_grid = prev.grid
    if workers > 1:
        grid = _g_wavefront(s, n, c_slice.grid, prev_grid, workers)
    else:
        ker = kernels or _backend.kernels
        grid = ker.g_slice_grid(s, n, c_slice.grid, prev_grid)
    return GeodeSlice(n, s, grid)


def _g_wavefront(s, n, c_grid, prev_grid, workers):
    """Parallel Geode slice fill.

    Cells on one anti-diagonal m4 + m5 = d depend only on diagonals < d,
    so each diagonal is split across workers and joined before the next.
    The result is cell-for-cell identical to the sequential fill.
    """
    out = [None] * ((n + 1) * (n + 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for d in range(2 * n + 1):
            lo = max(0, d - n)
            hi = min(d, n)
            count = hi - lo + 1
            if count == 1:
                _py_kernels.g_fill_run(s, n, c_grid, prev_grid, out, lo, hi + 1, d)
                continue
            step = -(-count // workers)
            futures = [
                pool.submit(
                    _py_kernels.g_fill_run,
                    s, n, c_grid, prev_grid, out, a, min(a + step, hi + 1), d,
                )
                for a in range(lo, hi + 1, step)
            ]
            for fut in futures:
                fut.result()
    return out


def geode_diagonal(
    n: int,
    progress=None,
    checkpoint=None,
    *,
    workers: int = 1,
    kernels=None,
    resume=None,
) -> int:
    """H(n) = G[n, n, n, n] by sweeping quadrilateral slices 0..n.

    After each slice s the hooks fire: ``progress(s, seconds, digits)``
    with the wall time of the slice and the digit count of the corner cell,
    then ``checkpoint(s, c_slice, g_slice)``.  Memory stays bounded: at any
    instant at most two count slices and two Geode slices are live.

    ``resume=(s0, c_slice, g_slice)`` continues a previous run from its
    slice s0; slices <= s0 are not recomputed and fire no hooks.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if resume is None:
        start = 0
        c = g = None
    else:
        s0, c, g = resume
        if not (0 <= s0 <= n):
            raise ValueError(f"resume slice {s0} out of range for n={n}")
        if c.n != n or g.n != n or c.s != s0 or g.s != s0:
            raise ValueError(
                f"resume slices are (n={c.n}, s={c.s})/(n={g.n}, s={g.s}), need (n={n}, s={s0})"
            )
        start = s0 + 1
    for s in range(start, n + 1):
        t0 = time.perf_counter()
        if s == 0:
            c = make_c_slice0(n, kernels=kernels)
        else:
            c = make_c_slice(s, n, c, kernels=kernels, workers=workers)
        g = make_g_slice(s, n, c, g if s else None, kernels=kernels, workers=workers)
        elapsed = time.perf_counter() - t0
        if progress is not None:
            progress(s, elapsed, len(str(g.cell(n, n))))
        if checkpoint is not None:
            checkpoint(s, c, g)
    return g.cell(n, n)
