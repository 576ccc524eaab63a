from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geode4.typevec import TypeVector, edges, faces, format_type, parse_type, vertices

from conftest import vectors_with_components_up_to


def test_edges_examples():
    assert edges((0, 0, 0, 0)) == 1
    assert edges((1, 0, 0, 0)) == 3
    assert edges((3, 2, 1, 0)) == 17
    assert edges((1000, 1000, 1000, 1000)) == 1 + 2000 + 3000 + 4000 + 5000


def test_vertices_examples():
    # the lone-hexagon case pins the m5 coefficient: a hexagon has 6 vertices
    assert vertices((0, 0, 0, 1)) == 6
    assert vertices((0, 0, 0, 0)) == 2
    assert vertices((3, 2, 1, 0)) == 12


def test_faces_examples():
    assert faces((0, 0, 0, 0)) == 0
    assert faces((3, 2, 1, 0)) == 6
    assert faces((1000, 1000, 1000, 1000)) == 4000


def test_euler_relation_exhaustive():
    for m in vectors_with_components_up_to(10):
        assert vertices(m) - edges(m) + faces(m) == 1


@given(st.tuples(*(st.integers(min_value=0, max_value=10**6) for _ in range(4))))
def test_euler_relation_large(m):
    assert vertices(m) - edges(m) + faces(m) == 1


def test_monotonicity_in_each_component():
    base = (3, 5, 2, 7)
    for slot in range(4):
        bumped = list(base)
        bumped[slot] += 1
        assert edges(bumped) > edges(base)
        assert vertices(bumped) > vertices(base)


def test_typevector_equality_and_fields():
    m = TypeVector(1, 2, 3, 4)
    assert m == (1, 2, 3, 4)
    assert (m.m2, m.m3, m.m4, m.m5) == (1, 2, 3, 4)
    assert TypeVector(1, 2, 3, 4) == TypeVector(1, 2, 3, 4)
    assert TypeVector(1, 2, 3, 4) != TypeVector(1, 2, 3, 5)


def test_parse_format_round_trip():
    assert parse_type("3,2,1,0") == TypeVector(3, 2, 1, 0)
    assert parse_type(" 3 , 2 , 1 , 0 ") == TypeVector(3, 2, 1, 0)
    assert format_type(TypeVector(3, 2, 1, 0)) == "3,2,1,0"
    for m in [(0, 0, 0, 0), (1, 0, 2, 9), (12, 7, 0, 3)]:
        assert tuple(parse_type(format_type(m))) == m


@pytest.mark.parametrize("bad", ["", "1,2,3", "1,2,3,4,5", "1,2,x,4", "1,2,-3,4"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_type(bad)
