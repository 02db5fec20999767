"""Reference tables of polygons with g <= 1, and reconciliation reports.

The g = 0 table is three families (two kinds of triangle and the trapezia);
the g = 1 table is the standard list of fourteen shapes, stated up to
reflection.  The enumeration works with the orientation-preserving group
only, so chiral table shapes gain a mirror twin, and two genus-one classes
(the degree-3 triangle and the cubic Veronese triangle) fall outside the
fourteen; the comparison reports all of that explicitly.
"""

from typing import NamedTuple

from .families import cone_polygon, scroll_polygon
from .polygon import (
    LatticePolygon,
    canonical_form,
    canonical_form_gl,
    enumerate_polygons,
    invariants,
)

# the standard fourteen shapes with one interior point, tagged P1(l, d, m)
_CENSUS1_VERTICES = {
    "P1(3,8,4)": [(0, 0), (4, 0), (0, 2)],
    "P1(3,6,3)": [(0, 0), (3, 0), (0, 2)],
    "P1(3,4,2)": [(0, 0), (2, 0), (1, 2)],
    "P1(4,4,1)": [(0, 0), (1, 0), (2, 2), (0, 1)],
    "P1(4,4,1)'": [(1, 0), (2, 1), (1, 2), (0, 1)],
    "P1(4,6,2)": [(0, 0), (2, 0), (1, 2), (0, 2)],
    "P1(4,8,2)": [(0, 0), (2, 0), (2, 2), (0, 2)],
    "P1(4,7,3)": [(0, 0), (3, 0), (1, 2), (0, 1)],
    "P1(4,5,2)": [(0, 0), (2, 0), (1, 2), (0, 1)],
    "P1(4,8,3)": [(0, 0), (3, 0), (1, 2), (0, 2)],
    "P1(5,5,1)": [(1, 0), (2, 1), (1, 2), (0, 2), (0, 1)],
    "P1(5,6,2)": [(0, 0), (2, 0), (2, 1), (1, 2), (0, 1)],
    "P1(5,7,2)": [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)],
    "P1(6,6,1)": [(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)],
}


def census1_shapes():
    """The standard fourteen g = 1 table shapes as (name, polygon) pairs."""
    return [(name, LatticePolygon(v)) for name, v in _CENSUS1_VERTICES.items()]


def census0_shapes(d_max):
    """The g = 0 table families instantiated up to area d_max."""
    shapes = []
    for delta in range(1, d_max + 1):
        shapes.append((f"triangle(1,{delta})", cone_polygon(delta)))
    if d_max >= 4:
        shapes.append(("triangle(2,2)", LatticePolygon([(0, 0), (2, 0), (0, 2)])))
    for d1 in range(1, d_max // 2 + 1):
        for d2 in range(d1, d_max - d1 + 1):
            shapes.append((f"trapezium({d1},{d2})", scroll_polygon(d1, d2)))
    return shapes


class CensusComparison(NamedTuple):
    classes: list        # canonical forms found by enumeration
    matched: dict        # canonical vertices -> table shape name
    mirror_surplus: dict  # canonical vertices -> name of the table mirror twin
    extra: list          # canonical forms matching no table shape either way
    missing: list        # table names with no enumerated class


def compare_census(g, d_max):
    """Enumerate classes and reconcile them with the reference tables."""
    found = enumerate_polygons(g, d_max)
    if g == 0:
        table = census0_shapes(d_max)
    else:
        table = [(n, P) for n, P in census1_shapes() if invariants(P).d <= d_max]
    by_sl = {}
    by_gl = {}
    for name, P in table:
        by_sl.setdefault(canonical_form(P).vertices, name)
        by_gl.setdefault(canonical_form_gl(P).vertices, name)
    matched = {}
    mirror_surplus = {}
    extra = []
    for C in found:
        if C.vertices in by_sl:
            matched[C.vertices] = by_sl[C.vertices]
        elif canonical_form_gl(C).vertices in by_gl:
            mirror_surplus[C.vertices] = by_gl[canonical_form_gl(C).vertices]
        else:
            extra.append(C)
    found_sl = {C.vertices for C in found}
    missing = [name for name, P in table if canonical_form(P).vertices not in found_sl]
    return CensusComparison(found, matched, mirror_surplus, extra, missing)
