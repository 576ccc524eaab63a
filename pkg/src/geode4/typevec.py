"""Face-type vectors for subdivided polygons.

A subdivision of a roofed polygon is classified by how many triangles,
quadrilaterals, pentagons and hexagons it contains.  That census is the
type vector ``m = (m2, m3, m4, m5)``: ``m[k-2]`` counts the faces with
``k + 1`` sides.  Edge, vertex and face counts of the whole figure are
linear in m and satisfy the Euler relation V - E + F = 1 (the outer face
is not counted).

Note on the vertex count: one sometimes sees the formula quoted with
coefficient 5 on the hexagon count.  That version is wrong; a single
hexagon has 6 vertices, not 7, and the count formulas below are the ones
under which the face-census division is always exact.  The hexagon
coefficient in ``vertices`` is 4.
"""

from __future__ import annotations

from typing import NamedTuple


class TypeVector(NamedTuple):
    """Face census of a subdivided polygon: counts of 3,4,5,6-gon faces."""

    m2: int
    m3: int
    m4: int
    m5: int


def edges(m) -> int:
    """Number of edges, the outer boundary included: 1 + sum of (k+1) per face."""
    m2, m3, m4, m5 = m
    return 1 + 2 * m2 + 3 * m3 + 4 * m4 + 5 * m5


def vertices(m) -> int:
    """Number of vertices: 2 + m2 + 2*m3 + 3*m4 + 4*m5."""
    m2, m3, m4, m5 = m
    return 2 + m2 + 2 * m3 + 3 * m4 + 4 * m5


def faces(m) -> int:
    """Number of interior faces, i.e. the total size of the census."""
    m2, m3, m4, m5 = m
    return m2 + m3 + m4 + m5


def parse_type(text: str) -> TypeVector:
    """Parse 'm2,m3,m4,m5' (optional spaces) into a TypeVector of naturals."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated components, got {text!r}")
    values = []
    for part in parts:
        try:
            value = int(part)
        except ValueError:
            raise ValueError(f"bad type component {part!r} in {text!r}") from None
        if value < 0:
            raise ValueError(f"type components must be >= 0, got {value}")
        values.append(value)
    return TypeVector(*values)


def format_type(m) -> str:
    """Inverse of parse_type: 'm2,m3,m4,m5' with no spaces."""
    m2, m3, m4, m5 = m
    return f"{m2},{m3},{m4},{m5}"
