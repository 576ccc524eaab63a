# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled slice propagation kernels.

Same contract and same results as geode4._py_kernels; see that module for
the cell formulas.  Ratio numerators and denominators in the step kernel
fit comfortably in C integers for any feasible n (they grow like 80*n*n,
so 64 bits last to n of a few hundred million); the slice-0 kernel keeps
its larger ratio products in Python ints.  Cell values are arbitrary
precision throughout.
"""

from .errors import InexactDivisionError, NonPositiveCellError

BACKEND_NAME = "cext"


def c_slice0_grid(n, seed):
    """See _py_kernels.c_slice0_grid."""
    cdef Py_ssize_t N = n
    cdef Py_ssize_t stride = N + 1
    cdef Py_ssize_t m4, m5, idx
    cdef long long om2, e, v
    cdef list grid = [None] * (stride * stride)
    cdef object donor, num, den, q, r
    grid[0] = seed
    for m4 in range(stride):
        for m5 in range(stride):
            if m4 == 0 and m5 == 0:
                continue
            idx = m4 * stride + m5
            om2 = 2 + 4 * N - (m4 + m5)
            if m4 > 0:
                e = 1 + 2 * om2 + 4 * (m4 - 1) + 5 * m5
                v = 2 + om2 + 3 * (m4 - 1) + 4 * m5
                num = (<object> om2) * e * (e + 1)
                den = (<object> m4) * v * (v + 1)
                donor = grid[idx - stride]
            else:
                e = 1 + 2 * om2 + 5 * (m5 - 1)
                v = 2 + om2 + 4 * (m5 - 1)
                num = (<object> om2) * e * (e + 1) * (e + 2)
                den = (<object> m5) * v * (v + 1) * (v + 2)
                donor = grid[idx - 1]
            q, r = divmod(donor * num, den)
            if r:
                raise InexactDivisionError(
                    f"slice 0 cell ({m4},{m5}): ratio {num}/{den} not exact"
                )
            grid[idx] = q
    return grid


def c_slice_next_grid(s, n, prev):
    """See _py_kernels.c_slice_next_grid."""
    cdef Py_ssize_t N = n
    cdef Py_ssize_t S = s
    cdef Py_ssize_t stride = N + 1
    cdef Py_ssize_t m4, m5, idx
    cdef long long om2, e, v, num, den
    cdef list prev_l = prev
    cdef list out = [None] * (stride * stride)
    cdef object q, r
    idx = 0
    for m4 in range(stride):
        for m5 in range(stride):
            om2 = 2 + 4 * N - (S + m4 + m5)
            e = 1 + 2 * om2 + 3 * (S - 1) + 4 * m4 + 5 * m5
            v = 2 + om2 + 2 * (S - 1) + 3 * m4 + 4 * m5
            num = om2 * e
            den = S * v
            q, r = divmod(prev_l[idx] * num, den)
            if r:
                raise InexactDivisionError(
                    f"slice {S} cell ({m4},{m5}): ratio {num}/{den} not exact"
                )
            out[idx] = q
            idx += 1
    return out


def g_slice_grid(s, n, c_grid, prev_g):
    """See _py_kernels.g_slice_grid."""
    cdef Py_ssize_t N = n
    cdef Py_ssize_t stride = N + 1
    cdef Py_ssize_t m4, m5, idx
    cdef bint have_prev = prev_g is not None
    cdef list c_l = c_grid
    cdef list prev_l = prev_g if have_prev else None
    cdef list out = [None] * (stride * stride)
    cdef object val
    idx = 0
    for m4 in range(stride):
        for m5 in range(stride):
            val = c_l[idx]
            if have_prev:
                val = val - prev_l[idx]
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
