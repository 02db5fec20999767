"""Reference constructions: fan stars and the delightful strip families."""

from .geometry import cross
from .polygon import LatticePolygon, lattice_points
from .triangulation import Triangulation


def fan_triangulation(P, apex):
    """The fan of triangles from ``apex`` over the opposite boundary chain.

    Valid whenever each fan triangle is unimodular; returns None otherwise.
    For an interior apex this is the full 360-degree fan over all boundary
    lattice points, for a boundary apex the fan over the chain of the other
    boundary points.
    """
    pts = lattice_points(P)
    idx = {p: i for i, p in enumerate(pts)}
    if apex not in idx:
        return None
    ring = P.boundary_lattice_points
    n = len(ring)
    tris = []
    if P.contains(apex) == 2:
        pairs = [(ring[i], ring[(i + 1) % n]) for i in range(n)]
    else:
        k = ring.index(apex)
        chain = [ring[(k + i) % n] for i in range(1, n)]
        pairs = list(zip(chain, chain[1:]))
    for a, b in pairs:
        if abs(cross(apex, a, b)) != 1:
            return None
        tris.append((idx[apex], idx[a], idx[b]))
    D = Triangulation(P, tris)
    if len(D.triangles) != P.area2:
        return None
    return D


def all_fan_stars(P):
    """All valid fan triangulations of P, keyed by apex."""
    out = {}
    for p in lattice_points(P):
        D = fan_triangulation(P, p)
        if D is not None:
            out[p] = D
    return out


def scroll_polygon(d1, d2):
    """Trapezium with parallel horizontal edges d1 (top) and d2 (bottom)."""
    if not (1 <= d1 <= d2):
        raise ValueError("need 1 <= d1 <= d2")
    if d1 == d2:
        return LatticePolygon([(0, 0), (d2, 0), (d2, 1), (0, 1)])
    return LatticePolygon([(0, 0), (d2, 0), (d1, 1), (0, 1)])


def cone_polygon(delta):
    """Triangle with legs delta and 1: the degenerate scroll."""
    return LatticePolygon([(0, 0), (delta, 0), (0, 1)])


def strip_square_triangulation(d1, d2):
    """Unit squares with falling diagonals, plus a closing triangle.

    Defined on the trapezium with top d1 and bottom d2 = d1 or d1 + 1.
    """
    if d2 - d1 not in (0, 1):
        raise ValueError("square strip exists only for bottom overhang 0 or 1")
    P = scroll_polygon(d1, d2)
    tris = []
    for j in range(d1):
        tris.append(((j, 0), (j + 1, 0), (j, 1)))
        tris.append(((j + 1, 0), (j, 1), (j + 1, 1)))
    if d2 == d1 + 1:
        tris.append(((d1, 0), (d1 + 1, 0), (d1, 1)))
    pts = lattice_points(P)
    idx = {p: i for i, p in enumerate(pts)}
    return Triangulation(P, [tuple(idx[q] for q in t) for t in tris])


def strip_zigzag_triangulation(d1, d2):
    """The zigzag strip: alternating long diagonals, bottom fan at the end.

    Defined on the trapezium with top d1 and bottom d2, d1 <= d2 <= d1 + 3.
    """
    if not (d1 <= d2 <= d1 + 3):
        raise ValueError("zigzag strip exists only for bottom overhang <= 3")
    P = scroll_polygon(d1, d2)
    tris = [((0, 0), (1, 0), (0, 1))]
    for j in range(d2 - 1):
        if j < d1:
            tris.append(((j, 1), (j + 1, 0), (j + 2, 0)))
        if j + 1 < d1:
            tris.append(((j, 1), (j + 2, 0), (j + 1, 1)))
    if d2 == d1:
        # no overhang: the zigzag closes on the right vertical edge
        tris.append(((d1 - 1, 1), (d1, 0), (d1, 1)))
    else:
        tris.append(((d1 - 1, 1), (d1 + 1, 0), (d1, 1)))
        for j in range(d1 + 1, d2):
            tris.append(((d1, 1), (j, 0), (j + 1, 0)))
    pts = lattice_points(P)
    idx = {p: i for i, p in enumerate(pts)}
    return Triangulation(P, [tuple(idx[q] for q in t) for t in tris])


def delightful_strip_family(d1, d2):
    """The delightful strip triangulations of the trapezium S(d1, d2).

    Square strips exist for overhang i <= 1, zigzags for i <= 3; for i >= 4
    the family is empty.
    """
    i = d2 - d1
    out = []
    if i <= 1:
        out.append(strip_square_triangulation(d1, d2))
    if i <= 3:
        out.append(strip_zigzag_triangulation(d1, d2))
    return out
