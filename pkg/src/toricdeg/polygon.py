"""Convex lattice polygons up to equiaffine equivalence.

A polygon is stored by its counter-clockwise vertex list with no three
consecutive vertices collinear; boundary lattice points that are not
vertices are recovered on demand.  The equivalence group is the group of
equiaffinities: integer affine maps whose linear part has determinant +1.
"""

from functools import cached_property
from typing import NamedTuple

from .geometry import (
    box_lattice_points,
    convex_hull,
    cross,
    lattice_length,
    point_in_convex,
    polygon_area2,
    primitive,
    segment_points,
    vsub,
)


class PolygonError(ValueError):
    """Raised for degenerate or malformed polygon input."""


class Equiaffinity:
    """Integer affine map x -> M x + t with det(M) = 1."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix, translation=(0, 0)):
        a, b, c, d = matrix
        if a * d - b * c != 1:
            raise ValueError("matrix must have determinant 1")
        self.matrix = (a, b, c, d)
        self.translation = (translation[0], translation[1])

    @classmethod
    def identity(cls):
        return cls((1, 0, 0, 1))

    @classmethod
    def shear(cls, k):
        """(x, y) -> (x + k*y, y)."""
        return cls((1, k, 0, 1))

    @classmethod
    def translate(cls, t):
        return cls((1, 0, 0, 1), t)

    def __call__(self, p):
        a, b, c, d = self.matrix
        return (a * p[0] + b * p[1] + self.translation[0],
                c * p[0] + d * p[1] + self.translation[1])

    def compose(self, other):
        """self after other."""
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        m = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        t = self(other.translation)
        return Equiaffinity(m, t)

    def inverse(self):
        a, b, c, d = self.matrix
        m = (d, -b, -c, a)
        tx, ty = self.translation
        return Equiaffinity(m, (-(d * tx - b * ty), -(-c * tx + a * ty)))

    def __repr__(self):
        return f"Equiaffinity({self.matrix}, {self.translation})"


class PolygonInvariants(NamedTuple):
    g: int          # interior lattice points (sectional genus)
    l: int          # number of edges = number of vertices
    d: int          # normalized area (twice Euclidean area)
    m: int          # maximal normalized edge length
    B: int          # boundary lattice points
    n_points: int   # total lattice points


class LatticePolygon:
    """Convex lattice polygon with integer vertices in CCW order.

    The stored vertex list is minimal: a boundary lattice point interior to
    an edge is never a vertex.  Construction rejects non-convex, repeated
    or collinear input.
    """

    __slots__ = ("vertices", "__dict__")

    def __init__(self, vertices):
        verts = [(int(x), int(y)) for x, y in vertices]
        for (x, y), orig in zip(verts, vertices):
            if x != orig[0] or y != orig[1]:
                raise PolygonError("vertices must have integer coordinates")
        if len(verts) < 3:
            raise PolygonError("a polygon needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise PolygonError("repeated vertex")
        n = len(verts)
        for i in range(n):
            c = cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n])
            if c == 0:
                raise PolygonError("three consecutive collinear vertices")
            if c < 0:
                raise PolygonError("vertices must be in counter-clockwise convex position")
        self.vertices = tuple(self._rotate_min(verts))

    @staticmethod
    def _rotate_min(verts):
        i = verts.index(min(verts))
        return verts[i:] + verts[:i]

    @classmethod
    def from_points(cls, points):
        """Polygon as the convex hull of a point set."""
        hull = convex_hull(points)
        if len(hull) < 3:
            raise PolygonError("points are collinear")
        return cls(hull)

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    @cached_property
    def area2(self):
        """Normalized area d = 2 * Euclidean area."""
        return polygon_area2(self.vertices)

    def edges(self):
        """CCW directed edges as vertex pairs."""
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    @cached_property
    def boundary_lattice_points(self):
        out = []
        for a, b in self.edges():
            out.extend(segment_points(a, b)[:-1])
        return out

    def contains(self, p):
        """2 interior, 1 boundary, 0 outside."""
        return point_in_convex(p, self.vertices)

    def translate(self, t):
        return LatticePolygon([(x + t[0], y + t[1]) for x, y in self.vertices])


def lattice_points(P):
    """All lattice points of P, sorted lexicographically (x, then y).

    This order is the index space used by every triangulation of P.
    """
    return box_lattice_points(P.vertices)


def invariants(P):
    """Exact invariant tuple (g, l, d, m, B, n_points) of a polygon."""
    d = P.area2
    B = len(P.boundary_lattice_points)
    n = len(lattice_points(P))
    g = n - B
    m = max(lattice_length(a, b) for a, b in P.edges())
    inv = PolygonInvariants(g=g, l=len(P.vertices), d=d, m=m, B=B, n_points=n)
    assert inv.d == 2 * inv.g + inv.B - 2, "Pick identity violated"
    return inv


def ehrhart_count(P, t):
    """#(tP ∩ Z^2) by direct enumeration of the dilated polygon."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    scaled = [(t * x, t * y) for x, y in P.vertices]
    return len(box_lattice_points(scaled))


def apply(T, P):
    """Image of P under the equiaffinity T."""
    return LatticePolygon([T(v) for v in P.vertices])


def _x_axis_map(q1, q2):
    """Equiaffinity sending q1 -> (0,0) and q2 -> (m,0), m the lattice length.

    For a CCW boundary edge (q1, q2) the rest of the polygon lands strictly
    above the x-axis.  Unique up to left-composition with a shear.
    """
    px, py = primitive(vsub(q2, q1))
    # complete (px, py) to an SL2(Z) basis: (c, d) with px*d - py*c = 1
    g, u, v = _ext_gcd(px, py)
    # u*px + v*py = 1, so matrix rows (u, v) and (-py, px) have det 1
    a, b = u, v
    c, d = -py, px
    m = (a, b, c, d)
    lin = Equiaffinity(m)
    t = lin(q1)
    return Equiaffinity(m, (-t[0], -t[1]))


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _encoding(T, pts):
    moved = sorted(T(p) for p in pts)
    ox, oy = moved[0]
    return tuple((x - ox, y - oy) for x, y in moved)


def canonical_transforms(P):
    """All equiaffinities realizing the canonical form of P.

    For every CCW boundary edge of maximal lattice length, the x-axis map is
    applied and the residual shear freedom is scanned over a finite window
    anchored at the topmost lattice point; the transforms achieving the
    lexicographically smallest sorted lattice-point encoding are returned.
    The window width d+2 is enough because after the x-axis map the polygon
    has height at most d, so each anchored shear moves the encoding
    monotonically outside that range.
    """
    pts = lattice_points(P)
    inv = invariants(P)
    best = None
    winners = []
    for q1, q2 in P.edges():
        if lattice_length(q1, q2) != inv.m:
            continue
        T0 = _x_axis_map(q1, q2)
        moved = [T0(p) for p in pts]
        h = max(y for _, y in moved)
        top = min(p for p in moved if p[1] == h)
        # anchor shear: bring the topmost point's x into [0, h)
        k0 = -(top[0] // h) if h else 0
        for k in range(k0 - (inv.d + 2), k0 + inv.d + 3):
            T = Equiaffinity.shear(k).compose(T0)
            enc = _encoding(T, pts)
            if best is None or enc < best:
                best = enc
                winners = [T]
            elif enc == best:
                winners.append(T)
    # fold the lex-min translation into each winner
    out = []
    for T in winners:
        ox, oy = min(T(p) for p in pts)
        out.append(Equiaffinity.translate((-ox, -oy)).compose(T))
    return out


def canonical_form(P):
    """Distinguished representative of the equiaffinity class of P."""
    return apply(canonical_transforms(P)[0], P)


def are_equivalent(P, Q):
    """True iff P and Q differ by an equiaffinity."""
    return canonical_form(P) == canonical_form(Q)


def mirror_polygon(P):
    """The reflection of P through x -> -x (determinant -1, so not an equiaffinity)."""
    return LatticePolygon.from_points([(-x, y) for x, y in P.vertices])


def canonical_form_gl(P):
    """Representative under the coarser group that also allows reflections."""
    return min(
        canonical_form(P), canonical_form(mirror_polygon(P)), key=lambda C: C.vertices
    )


def _anchored_chains(m, height, d_max):
    """Convex polygons with bottom edge (0,0)-(m,0) of maximal length m.

    Yields vertex lists (CCW, starting at (0,0)) of all convex lattice
    polygons of normalized area <= d_max whose bottom edge is exactly
    [0,m] x {0}, whose other vertices have 1 <= y <= height, and whose
    edges all have lattice length <= m.  Horizontal extent is confined to
    [-d_max, d_max + m]; every class has a representative in that window:
    shear the x-axis position so the topmost lattice point t = (x_t, h)
    has x_t in [0, h).  For any vertex v the triangle spanned by (0,0),
    t and v fits inside the polygon, so |x_t * v_y - v_x * h| <= d, giving
    v_x <= d/h + h <= d + 1 <= d_max + m; the mirror-image triangle at
    (m, 0) bounds v_x >= m - d - 1 >= -d_max the same way.
    """
    x_lo, x_hi = -d_max, d_max + m
    base_a = (0, 0)
    base_b = (m, 0)

    def extend(chain, area2):
        last = chain[-1]
        prev = chain[-2]
        # close the chain back to (0,0)?
        if len(chain) >= 3:
            if (
                cross(prev, last, base_a) > 0
                and cross(last, base_a, base_b) > 0
                and lattice_length(last, base_a) <= m
            ):
                yield list(chain)
        for y in range(1, height + 1):
            for x in range(x_lo, x_hi + 1):
                nxt = (x, y)
                if nxt == last:
                    continue
                if lattice_length(last, nxt) > m:
                    continue
                if cross(prev, last, nxt) <= 0:
                    continue
                # the closing fan triangle (0,0), last, nxt adds this much area
                gain = cross(base_a, last, nxt)
                if gain <= 0 or area2 + gain > d_max:
                    continue
                chain.append(nxt)
                yield from extend(chain, area2 + gain)
                chain.pop()

    for y in range(1, height + 1):
        for x in range(x_lo, x_hi + 1):
            v1 = (x, y)
            if lattice_length(base_b, v1) > m:
                continue
            if cross(base_a, base_b, v1) <= 0:
                continue
            area2 = cross(base_a, base_b, v1)
            if area2 > d_max:
                continue
            yield from extend([base_a, base_b, v1], area2)


def enumerate_classes(d_max, g=None):
    """All equivalence classes of convex lattice polygons with area <= d_max.

    Returns canonical forms, sorted by (d, g, vertex list).  If ``g`` is
    given, only classes with that number of interior points are kept.
    Every class is hit: by the x-axis construction it has a representative
    with a maximal-length edge on [0,m] x {0}, height at most d/m (the
    triangle over the base already has area m*h/2), and x-extent at most d.
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    seen = {}
    for m in range(1, d_max + 1):
        for verts in _anchored_chains(m, d_max // m, d_max):
            try:
                P = LatticePolygon(verts)
            except PolygonError:
                continue
            inv = invariants(P)
            if inv.m != m or inv.d > d_max:
                continue
            if g is not None and inv.g != g:
                continue
            C = canonical_form(P)
            seen.setdefault(C.vertices, (inv, C))
    ordered = sorted(seen.values(), key=lambda t: (t[0].d, t[0].g, t[1].vertices))
    return [C for _, C in ordered]


def enumerate_polygons(g, d_max):
    """Canonical forms of all classes with the given genus and area <= d_max."""
    if g not in (0, 1):
        raise ValueError("census enumeration supports g in {0, 1}")
    return enumerate_classes(d_max, g=g)
