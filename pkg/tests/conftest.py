"""Shared oracles for the test suite.

These deliberately re-derive values through routes the code under test does
not use: plain math.factorial quotients, binomials, and brute composition
loops.  Keeping them here, independent and dumb, is the point.
"""

from __future__ import annotations

import math


def closed_form(m) -> int:
    """Subdivision count straight from factorials, no caching, no ratios."""
    m2, m3, m4, m5 = m
    e = 1 + 2 * m2 + 3 * m3 + 4 * m4 + 5 * m5
    v = 2 + m2 + 2 * m3 + 3 * m4 + 4 * m5
    num = math.factorial(e - 1)
    den = (
        math.factorial(v - 1)
        * math.factorial(m2)
        * math.factorial(m3)
        * math.factorial(m4)
        * math.factorial(m5)
    )
    assert num % den == 0, f"closed form not integral at {m}"
    return num // den


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def vectors_with_components_up_to(bound, length=4):
    if length == 0:
        yield ()
        return
    for head in range(bound + 1):
        for rest in vectors_with_components_up_to(bound, length - 1):
            yield (head,) + rest


def vectors_with_degree_up_to(cap):
    for m2 in range(cap + 1):
        for m3 in range(cap - m2 + 1):
            for m4 in range(cap - m2 - m3 + 1):
                for m5 in range(cap - m2 - m3 - m4 + 1):
                    yield (m2, m3, m4, m5)
