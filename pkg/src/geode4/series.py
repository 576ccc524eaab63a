"""Formal power series oracle.

Everything the fast slice engine computes can be recomputed, slowly and
independently, from one generating series.  S = S(t2, t3, t4, t5) counts
subdivisions by face census and is the unique series with constant term 1
satisfying

    S = 1 + t2 S^2 + t3 S^3 + t4 S^4 + t5 S^5.

Iterating that map from S = 1 stabilizes each total degree after as many
rounds as the degree, so a cap-D truncation is exact after D iterations.
The Geode series G is (S - 1) / (t2 + t3 + t4 + t5), an honest power
series with integer coefficients; ``divide_by_s1`` performs that division
and proves exactness by leaving remainder zero.

Series are truncated by total degree and stored sparsely as a dict from
exponent 4-tuples to nonzero integer coefficients.  This module is the
test oracle, not the fast path; clarity over speed.
"""

from __future__ import annotations

import math

from .errors import InexactDivisionError
from .hypercat import hyper_catalan

_ZERO = (0, 0, 0, 0)


class TruncatedSeries:
    """Integer power series in t2..t5, truncated beyond total degree ``cap``."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap: int, coeffs: dict):
        self.cap = cap
        self.coeffs = coeffs

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries(cap={self.cap}, terms={len(self.coeffs)})"


def _mul(a: dict, b: dict, cap: int) -> dict:
    """Product of sparse coefficient dicts, dropping degrees beyond cap."""
    if cap < 0:
        return {}
    by_degree: dict[int, list] = {}
    for eb, cb in b.items():
        by_degree.setdefault(sum(eb), []).append((eb, cb))
    out: dict[tuple, int] = {}
    for ea, ca in a.items():
        room = cap - sum(ea)
        if room < 0:
            continue
        for db, terms in by_degree.items():
            if db > room:
                continue
            for eb, cb in terms:
                key = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                out[key] = out.get(key, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _add_shifted_powers(acc: dict, s: dict, cap: int, sign: int) -> None:
    """acc += sign * sum_k t_k S^k, truncated at cap, k = 2..5 in turn."""
    power = s
    for k in (2, 3, 4, 5):
        power = _mul(power, s, cap - 1)
        slot = k - 2
        for e, c in power.items():
            key = list(e)
            key[slot] += 1
            key = tuple(key)
            acc[key] = acc.get(key, 0) + sign * c
            if acc[key] == 0:
                del acc[key]


def series_solve(cap: int) -> TruncatedSeries:
    """The subdivision-count series, exact through total degree ``cap``."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    coeffs = {_ZERO: 1}
    for _ in range(cap):
        nxt = {_ZERO: 1}
        _add_shifted_powers(nxt, coeffs, cap, +1)
        coeffs = nxt
    return TruncatedSeries(cap, coeffs)


def verify_geometric_zero(series: TruncatedSeries) -> bool:
    """True iff 1 - S + t2 S^2 + t3 S^3 + t4 S^4 + t5 S^5 = 0 through cap."""
    residual = {_ZERO: 1}
    for e, c in series.coeffs.items():
        residual[e] = residual.get(e, 0) - c
        if residual[e] == 0:
            del residual[e]
    _add_shifted_powers(residual, series.coeffs, series.cap, +1)
    return not residual


def _degree_vectors_desc(d: int):
    """Exponent 4-tuples of total degree d in descending lexicographic order."""
    for e2 in range(d, -1, -1):
        for e3 in range(d - e2, -1, -1):
            for e4 in range(d - e2 - e3, -1, -1):
                yield (e2, e3, e4, d - e2 - e3 - e4)


def divide_by_s1(series: TruncatedSeries) -> TruncatedSeries:
    """(series - 1) / (t2 + t3 + t4 + t5), remainder checked to be zero.

    Works degree by degree.  Within degree d, monomials are resolved in
    descending lexicographic order: matching a residual monomial e against
    the t2 term of the divisor determines the quotient monomial e - u2,
    and the corrections it forces (the t3, t4, t5 products) land only on
    lexicographically smaller monomials of the same degree, which are
    visited later.  A monomial with no t2 left that is still nonzero, or
    any leftover at the end of a degree, means the input was not an exact
    multiple; both raise.
    """
    if series.coeffs.get(_ZERO, 0) != 1:
        raise ValueError("series must have constant term 1")
    if series.cap < 1:
        raise ValueError("need cap >= 1 to divide off a degree-one factor")
    quotient: dict[tuple, int] = {}
    for d in range(1, series.cap + 1):
        residual: dict[tuple, int] = {}
        for e in _degree_vectors_desc(d):
            c = series.coeffs.get(e, 0)
            if c:
                residual[e] = c
        for e in _degree_vectors_desc(d):
            c = residual.get(e, 0)
            if not c:
                continue
            if e[0] == 0:
                raise InexactDivisionError(
                    f"remainder {c} at t-exponents {e}: not a multiple of t2+t3+t4+t5"
                )
            q = (e[0] - 1, e[1], e[2], e[3])
            quotient[q] = c
            del residual[e]
            for slot in (1, 2, 3):
                key = list(q)
                key[slot] += 1
                key = tuple(key)
                residual[key] = residual.get(key, 0) - c
                if residual[key] == 0:
                    del residual[key]
        if residual:
            raise InexactDivisionError(f"degree {d} leaves remainder {residual}")
    return TruncatedSeries(series.cap - 1, quotient)


def coefficient(series: TruncatedSeries, m) -> int:
    """Coefficient of t2^m2 t3^m3 t4^m4 t5^m5; m must be within the cap."""
    key = tuple(m)
    if sum(key) > series.cap:
        raise ValueError(f"degree {sum(key)} beyond series cap {series.cap}")
    return series.coeffs.get(key, 0)


def face_layer_count(total_faces: int) -> int:
    """Number of subdivisions with exactly ``total_faces`` faces of any kind.

    Sums the exact counts over every census (m2, m3, m4, m5) with
    m2 + m3 + m4 + m5 = total_faces.
    """
    if total_faces < 0:
        raise ValueError("face count must be >= 0")
    total = 0
    for m2 in range(total_faces + 1):
        for m3 in range(total_faces - m2 + 1):
            for m4 in range(total_faces - m2 - m3 + 1):
                m5 = total_faces - m2 - m3 - m4
                total += hyper_catalan((m2, m3, m4, m5))
    return total


def monomial_count(total_faces: int) -> int:
    """Number of degree-``total_faces`` monomials in 4 variables."""
    if total_faces < 0:
        raise ValueError("face count must be >= 0")
    return math.comb(total_faces + 3, 3)
