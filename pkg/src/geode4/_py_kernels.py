"""Pure-Python slice propagation kernels.

Reference implementations of the hot loops.  ``geode4._kernels`` is a
compiled twin with identical signatures and identical results;
``geode4._backend`` picks one at import time.

Grids are dense row-major lists of Python ints: a slice at fixed s over
0 <= m4, m5 <= n lives at index ``m4 * (n + 1) + m5``.  Every division is
checked for a zero remainder so an arithmetic mistake surfaces at the cell
where it happened instead of corrupting a long run.
"""

from .errors import InexactDivisionError, NonPositiveCellError

BACKEND_NAME = "py"


def c_slice0_grid(n, seed):
    """Quadrilateral-free slice: cell (m4, m5) holds the count of type
    [1 + 4n - (m4 + m5), 0, m4, m5].

    ``seed`` is the count for [1 + 4n, 0, 0, 0].  Each other cell is pulled
    from an already computed neighbor, along a row from (m4 - 1, m5) and in
    row zero from (0, m5 - 1), by multiplying with the exact ratio of the
    two counts.
    """
    stride = n + 1
    grid = [None] * (stride * stride)
    grid[0] = seed
    for m4 in range(stride):
        for m5 in range(stride):
            if m4 == 0 and m5 == 0:
                continue
            idx = m4 * stride + m5
            # om2 = donor's triangle count = this cell's m2 + 1
            om2 = 2 + 4 * n - (m4 + m5)
            if m4 > 0:
                # donor (m4 - 1, m5): one pentagon appears, one triangle goes
                e = 1 + 2 * om2 + 4 * (m4 - 1) + 5 * m5
                v = 2 + om2 + 3 * (m4 - 1) + 4 * m5
                num = om2 * e * (e + 1)
                den = m4 * v * (v + 1)
                donor = grid[idx - stride]
            else:
                # donor (0, m5 - 1): one hexagon appears, one triangle goes
                e = 1 + 2 * om2 + 5 * (m5 - 1)
                v = 2 + om2 + 4 * (m5 - 1)
                num = om2 * e * (e + 1) * (e + 2)
                den = m5 * v * (v + 1) * (v + 2)
                donor = grid[idx - 1]
            q, r = divmod(donor * num, den)
            if r:
                raise InexactDivisionError(
                    f"slice 0 cell ({m4},{m5}): ratio {num}/{den} not exact"
                )
            grid[idx] = q
    return grid


def c_step_range(s, n, prev, out, start, stop):
    """Fill out[start:stop] of slice s from slice s - 1 (cells independent).

    Requires s >= 1.  Cell (m4, m5) of slice s equals the same cell of the
    previous slice times the exact ratio that trades one triangle for one
    quadrilateral.
    """
    stride = n + 1
    for idx in range(start, stop):
        m4, m5 = divmod(idx, stride)
        # donor = previous slice, same (m4, m5); its triangle count is om2
        om2 = 2 + 4 * n - (s + m4 + m5)
        e = 1 + 2 * om2 + 3 * (s - 1) + 4 * m4 + 5 * m5
        v = 2 + om2 + 2 * (s - 1) + 3 * m4 + 4 * m5
        q, r = divmod(prev[idx] * (om2 * e), s * v)
        if r:
            raise InexactDivisionError(
                f"slice {s} cell ({m4},{m5}): ratio {om2 * e}/{s * v} not exact"
            )
        out[idx] = q


def c_slice_next_grid(s, n, prev):
    """Whole-grid form of c_step_range."""
    out = [None] * ((n + 1) * (n + 1))
    c_step_range(s, n, prev, out, 0, len(out))
    return out


def g_fill_run(s, n, c_grid, prev_g, out, m4_lo, m4_hi, diag):
    """Fill cells (m4, diag - m4) for m4 in [m4_lo, m4_hi).

    Wavefront building block: every cell on anti-diagonal ``diag`` depends
    only on cells of strictly smaller anti-diagonals, which must already be
    filled in ``out``.  ``prev_g`` is the Geode slice below (None when s=0).
    """
    stride = n + 1
    for m4 in range(m4_lo, m4_hi):
        m5 = diag - m4
        idx = m4 * stride + m5
        val = c_grid[idx]
        if prev_g is not None:
            val = val - prev_g[idx]
        if m4 > 0:
            val = val - out[idx - stride]
        if m5 > 0:
            val = val - out[idx - 1]
        if val <= 0:
            raise NonPositiveCellError(
                f"Geode slice {s} cell ({m4},{m5}) is {val}; must be positive"
            )
        out[idx] = val


def g_slice_grid(s, n, c_grid, prev_g):
    """Geode slice s from its matching count slice and the slice below.

    Cell (m4, m5) holds G[4n - (s + m4 + m5), s, m4, m5]: the count with the
    triangle component raised by one, minus the three already-known Geode
    neighbors (each term dropped when its index would go negative).
    Row-major order visits (m4, m5) after (m4 - 1, m5) and (m4, m5 - 1),
    so a plain double loop satisfies the dependencies.
    """
    stride = n + 1
    out = [None] * (stride * stride)
    idx = 0
    for m4 in range(stride):
        for m5 in range(stride):
            val = c_grid[idx]
            if prev_g is not None:
                val = val - prev_g[idx]
            if m4 > 0:
                val = val - out[idx - stride]
            if m5 > 0:
                val = val - out[idx - 1]
            if val <= 0:
                raise NonPositiveCellError(
                    f"Geode slice {s} cell ({m4},{m5}) is {val}; must be positive"
                )
            out[idx] = val
            idx += 1
    return out
