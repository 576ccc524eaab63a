"""Exact subdivision counts and ratio-propagated slices.

The number of subdivisions of a roofed polygon with face census
``m = (m2, m3, m4, m5)`` is

    C[m] = (E - 1)! / ((V - 1)! m2! m3! m4! m5!)

with E and V the edge and vertex counts from :mod:`geode4.typevec`.  The
quotient is always an integer; every code path that divides asserts so.

Large diagonal computations never evaluate the closed form per cell.  They
build whole slices: fixed quadrilateral count s, all (m4, m5) in a square
grid, each cell derived from a neighbor by an exact integer ratio.  The
ratio of two counts whose censuses differ by trading one face for a bigger
one collapses to a short product of rising factorials, see
:func:`neighbor_ratio`.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from . import _backend, _py_kernels
from .errors import InexactDivisionError
from .typevec import TypeVector, edges, vertices


@lru_cache(maxsize=None)
def factorial_cached(k: int) -> int:
    """k!, cached across calls.

    The cache is unbounded but only ever holds one entry per distinct
    argument, and the underlying lru_cache is thread-safe.
    """
    return math.factorial(k)


def hyper_catalan(m) -> int:
    """Exact count of subdivisions with face census m (naturals)."""
    m2, m3, m4, m5 = m
    num = factorial_cached(edges(m) - 1)
    den = (
        factorial_cached(vertices(m) - 1)
        * factorial_cached(m2)
        * factorial_cached(m3)
        * factorial_cached(m4)
        * factorial_cached(m5)
    )
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"closed form not an integer at {tuple(m)}")
    return q


def _rising(x: int, count: int) -> int:
    """x (x+1) ... (x+count-1) for count >= 1."""
    out = x
    for i in range(1, count):
        out *= x + i
    return out


def neighbor_ratio(m, j: int, k: int) -> tuple[int, int]:
    """Exact ratio C[m - e_j + e_k] / C[m] as a (numerator, denominator) pair.

    Trading one (j+1)-gon for one (k+1)-gon (2 <= j < k <= 5) adds k - j
    edges and k - j vertices, so the factorial quotient telescopes:

        num = m_j * E (E+1) ... (E + k - j - 1)
        den = (1 + m_k) * V (V+1) ... (V + k - j - 1)

    with E, V taken at m.  Requires m_j >= 1.  The pair is returned as
    computed, not reduced to lowest terms; callers multiply first and
    divide once, asserting exactness.
    """
    if not (2 <= j < k <= 5):
        raise ValueError(f"need 2 <= j < k <= 5, got j={j} k={k}")
    mj = m[j - 2]
    if mj < 1:
        raise ValueError(f"component m{j} must be >= 1 to trade away")
    d = k - j
    num = mj * _rising(edges(m), d)
    den = (1 + m[k - 2]) * _rising(vertices(m), d)
    return num, den


class CatalanSlice:
    """Square grid of counts at fixed quadrilateral count s.

    Cell (m4, m5), 0 <= m4, m5 <= n, holds the count of type
    [1 + 4n - (s + m4 + m5), s, m4, m5]; the triangle component is
    whatever keeps the weighted face total constant, so the grid covers
    exactly the censuses a diagonal run needs.  ``grid`` is row-major,
    index m4 * (n + 1) + m5.  Every entry is a positive integer.
    """

    __slots__ = ("n", "s", "grid")

    def __init__(self, n: int, s: int, grid: list):
        self.n = n
        self.s = s
        self.grid = grid

    def cell(self, m4: int, m5: int) -> int:
        return self.grid[m4 * (self.n + 1) + m5]

    def type_at(self, m4: int, m5: int) -> TypeVector:
        return TypeVector(1 + 4 * self.n - (self.s + m4 + m5), self.s, m4, m5)

    def __eq__(self, other):
        if not isinstance(other, CatalanSlice):
            return NotImplemented
        return (self.n, self.s, self.grid) == (other.n, other.s, other.grid)

    def __repr__(self):
        return f"CatalanSlice(n={self.n}, s={self.s})"


def make_c_slice0(n: int, kernels=None) -> CatalanSlice:
    """Slice s=0, seeded once via the closed form and grown by ratios.

    The seed C[1 + 4n, 0, 0, 0] is the (1 + 4n)-th Catalan number; every
    other cell follows from a neighbor already in the grid, so the closed
    form is evaluated exactly once per run.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ker = kernels or _backend.kernels
    seed = hyper_catalan((1 + 4 * n, 0, 0, 0))
    return CatalanSlice(n, 0, ker.c_slice0_grid(n, seed))


def make_c_slice(s: int, n: int, prev: CatalanSlice, kernels=None, workers: int = 1) -> CatalanSlice:
    """Slice s >= 1 from slice s - 1 (same grid shape, cellwise ratio step)."""
    if s < 1:
        raise ValueError("make_c_slice builds slices s >= 1; use make_c_slice0")
    if prev.s != s - 1 or prev.n != n:
        raise ValueError(
            f"predecessor mismatch: have (n={prev.n}, s={prev.s}), need (n={n}, s={s - 1})"
        )
    if workers > 1:
        grid = _c_step_parallel(s, n, prev.grid, workers)
    else:
        ker = kernels or _backend.kernels
        grid = ker.c_slice_next_grid(s, n, prev.grid)
    return CatalanSlice(n, s, grid)


def _c_step_parallel(s: int, n: int, prev_grid: list, workers: int) -> list:
    # cells of a step slice are mutually independent: chunk by index range
    total = (n + 1) * (n + 1)
    out = [None] * total
    step = -(-total // workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_py_kernels.c_step_range, s, n, prev_grid, out, a, min(a + step, total))
            for a in range(0, total, step)
        ]
        for fut in futures:
            fut.result()
    return out
