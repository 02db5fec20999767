"""Exact integer primitives for planar lattice geometry.

Everything in this package works on points of Z^2 represented as plain
``(x, y)`` tuples of Python ints.  No floats anywhere.
"""

from math import gcd

Point = tuple  # (x, y) with int entries


def cross(o, a, b):
    """Twice the signed area of the triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def vcross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def vsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def vadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def lattice_length(a, b):
    """Number of unit lattice steps along the segment from a to b."""
    return gcd(abs(a[0] - b[0]), abs(a[1] - b[1]))


def primitive(v):
    """Primitive vector in the direction of v (v must be nonzero)."""
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def segment_points(a, b):
    """All lattice points on the closed segment [a, b], from a to b."""
    n = lattice_length(a, b)
    if n == 0:
        return [a]
    sx = (b[0] - a[0]) // n
    sy = (b[1] - a[1]) // n
    return [(a[0] + i * sx, a[1] + i * sy) for i in range(n + 1)]


def convex_hull(points):
    """Convex hull in CCW order, collinear points dropped (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_area2(vertices):
    """Twice the (signed) shoelace area; positive for CCW order."""
    s = 0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def point_in_convex(p, vertices):
    """2 strictly inside, 1 on the boundary, 0 outside (vertices CCW)."""
    on_edge = False
    n = len(vertices)
    for i in range(n):
        c = cross(vertices[i], vertices[(i + 1) % n], p)
        if c < 0:
            return 0
        if c == 0:
            # on the supporting line; confine to the edge's box
            a, b = vertices[i], vertices[(i + 1) % n]
            if (
                min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
            ):
                on_edge = True
            else:
                return 0
    return 1 if on_edge else 2


def box_lattice_points(vertices):
    """Lattice points of a convex CCW polygon, sorted lexicographically."""
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if point_in_convex((x, y), vertices):
                out.append((x, y))
    return out


def _project(vertices, axis):
    dots = [v[0] * axis[0] + v[1] * axis[1] for v in vertices]
    return min(dots), max(dots)


def convex_interiors_disjoint(A, B):
    """True iff the convex CCW polygons A and B have disjoint interiors.

    Separating-axis test over the edge normals of both polygons; touching
    along boundaries counts as disjoint.  Exact integer arithmetic.
    """
    for poly in (A, B):
        n = len(poly)
        for i in range(n):
            e = vsub(poly[(i + 1) % n], poly[i])
            axis = (-e[1], e[0])
            amin, amax = _project(A, axis)
            bmin, bmax = _project(B, axis)
            if amax <= bmin or bmax <= amin:
                return True
    return False


def triangles_interior_disjoint(t1, t2):
    return convex_interiors_disjoint(list(t1), list(t2))
