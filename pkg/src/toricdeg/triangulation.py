"""Unimodular triangulations and coarser subdivisions of a lattice polygon.

Triangles are stored as sorted index triples into the lexicographically
sorted lattice-point list of the polygon; that list is the shared index
space for all structures built on one polygon.
"""

from typing import NamedTuple, Optional

from .geometry import (
    convex_hull,
    convex_interiors_disjoint,
    cross,
    lattice_length,
    polygon_area2,
    segment_points,
)
from .polygon import LatticePolygon, canonical_transforms, lattice_points


class TriangulationError(ValueError):
    """Raised for malformed triangulation input."""


class SubdivisionError(ValueError):
    """Raised when the intermediate-subdivision construction fails."""


class Triangulation:
    """A set of unimodular triangles tiling a lattice polygon."""

    def __init__(self, polygon, triangles):
        self.polygon = polygon
        self.points = lattice_points(polygon)
        tris = []
        n = len(self.points)
        for t in triangles:
            t = tuple(sorted(t))
            if len(t) != 3 or len(set(t)) != 3:
                raise TriangulationError(f"not a triangle: {t}")
            if not all(0 <= i < n for i in t):
                raise TriangulationError(f"vertex index out of range in {t}")
            tris.append(t)
        self.triangles = frozenset(tris)

    def coords(self, tri):
        return tuple(self.points[i] for i in tri)

    def triangle_list(self):
        """Triangles in a fixed deterministic order."""
        return sorted(self.triangles)

    def index_of(self, p):
        try:
            return self.points.index(p)
        except ValueError:
            raise TriangulationError(f"{p} is not a lattice point of the polygon")

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.polygon == other.polygon
            and self.triangles == other.triangles
        )

    def __hash__(self):
        return hash((self.polygon, self.triangles))

    def __repr__(self):
        return f"Triangulation({self.polygon!r}, {len(self.triangles)} triangles)"


class Cell(NamedTuple):
    polygon: LatticePolygon
    member_triangles: Optional[frozenset]  # index triples of a finer triangulation
    label: Optional[str] = None


class Subdivision:
    """A face-to-face partition of a polygon into convex lattice cells."""

    def __init__(self, polygon, cells):
        self.polygon = polygon
        self.points = lattice_points(polygon)
        self.cells = tuple(cells)

    def __repr__(self):
        return f"Subdivision({self.polygon!r}, {len(self.cells)} cells)"


class Star(NamedTuple):
    point: tuple
    triangles: frozenset
    hull: Optional[LatticePolygon]


def triangle_polygon(D, tri):
    """The triangle of D with index triple ``tri`` as a CCW polygon."""
    a, b, c = (D.points[i] for i in tri)
    if cross(a, b, c) < 0:
        b, c = c, b
    return LatticePolygon([a, b, c])


def boundary_unit_edges(P, points=None):
    """Unit boundary edges of P as sorted index pairs."""
    pts = points if points is not None else lattice_points(P)
    idx = {p: i for i, p in enumerate(pts)}
    edges = set()
    for a, b in P.edges():
        seg = segment_points(a, b)
        for u, v in zip(seg, seg[1:]):
            edges.add(tuple(sorted((idx[u], idx[v]))))
    return edges


def why_invalid(D):
    """First violated triangulation invariant, or None if D is valid."""
    pts = D.points
    tris = D.triangle_list()
    if not tris:
        return "empty triangulation"
    for t in tris:
        a, b, c = (pts[i] for i in t)
        if abs(cross(a, b, c)) != 1:
            return f"triangle {t} is not unimodular"
    for i in range(len(tris)):
        A = [pts[k] for k in tris[i]]
        for j in range(i + 1, len(tris)):
            B = [pts[k] for k in tris[j]]
            if not convex_interiors_disjoint(A, B):
                return f"triangles {tris[i]} and {tris[j]} overlap"
    d = D.polygon.area2
    if len(tris) != d:
        return f"{len(tris)} triangles but normalized area is {d}"
    used = set()
    for t in tris:
        used.update(t)
    if len(used) != len(pts):
        missing = [pts[i] for i in range(len(pts)) if i not in used]
        return f"lattice points not used: {missing}"
    return None


def validate(D):
    """True iff D satisfies every triangulation invariant."""
    return why_invalid(D) is None


def _unimodular_triangles(pts):
    n = len(pts)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if abs(cross(pts[i], pts[j], pts[k])) == 1:
                    out.append((i, j, k))
    return out


def enumerate_triangulations(P):
    """All unimodular triangulations of P, deterministically ordered.

    Depth-first frontier search: the lexicographically first uncovered
    boundary edge of the uncovered region is covered in all possible ways.
    Each completed triangulation is produced exactly once because the
    triangle covering the region side of the chosen edge is unique in any
    completion.
    """
    pts = lattice_points(P)
    d = P.area2
    tris = _unimodular_triangles(pts)
    ntri = len(tris)
    coords = [tuple(pts[i] for i in t) for t in tris]

    compat = [0] * ntri
    for i in range(ntri):
        ci = list(coords[i])
        for j in range(i + 1, ntri):
            if convex_interiors_disjoint(ci, list(coords[j])):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    # candidate triangles per (edge, required side)
    cand = {}
    for t_idx, t in enumerate(tris):
        for a, b in ((0, 1), (0, 2), (1, 2)):
            e = (t[a], t[b])
            o = t[3 - a - b]
            side = 1 if cross(pts[e[0]], pts[e[1]], pts[o]) > 0 else -1
            cand.setdefault((e, side), []).append(t_idx)

    boundary = boundary_unit_edges(P, pts)
    init_frontier = {}
    for e in boundary:
        # interior of P lies on one definite side of each boundary unit edge
        probe = next(
            i for i in range(len(pts)) if cross(pts[e[0]], pts[e[1]], pts[i]) != 0
        )
        side = 1 if cross(pts[e[0]], pts[e[1]], pts[probe]) > 0 else -1
        init_frontier[e] = side

    results = []
    frontier = dict(init_frontier)
    chosen = []

    def dfs(covered_mask):
        if len(chosen) == d:
            results.append(frozenset(tris[i] for i in chosen))
            return
        e = min(frontier)
        need = frontier[e]
        for t_idx in cand.get((e, need), ()):
            if compat[t_idx] & covered_mask != covered_mask:
                continue
            t = tris[t_idx]
            touched = []
            for a, b in ((0, 1), (0, 2), (1, 2)):
                f = (t[a], t[b])
                o = t[3 - a - b]
                side = 1 if cross(pts[f[0]], pts[f[1]], pts[o]) > 0 else -1
                if f in frontier:
                    touched.append((f, frontier[f]))
                    del frontier[f]
                elif f not in boundary:
                    touched.append((f, None))
                    frontier[f] = -side
            chosen.append(t_idx)
            dfs(covered_mask | (1 << t_idx))
            chosen.pop()
            for f, old in touched:
                if old is None:
                    del frontier[f]
                else:
                    frontier[f] = old

    dfs(0)
    out = [Triangulation(P, r) for r in results]
    out.sort(key=lambda D: D.triangle_list())
    return out


def star(D, p):
    """Triangles of D covering the lattice point p, with convex hull if any.

    In a unimodular triangulation a triangle covering p has p as a vertex,
    so the star is the fan of triangles around p; the hull field is set
    exactly when the union of the fan is convex, and then equals it.
    """
    i = D.index_of(p)
    tris = frozenset(t for t in D.triangles if i in t)
    verts = sorted({v for t in tris for v in t})
    hull = convex_hull([D.points[v] for v in verts])
    hull_poly = None
    if len(hull) >= 3 and polygon_area2(hull) == len(tris):
        hull_poly = LatticePolygon(hull)
    return Star(point=p, triangles=tris, hull=hull_poly)


def _on_polygon_boundary(P, a, b):
    """True iff the segment [a, b] lies on the boundary of P."""
    for u, v in P.edges():
        if cross(u, v, a) == 0 and cross(u, v, b) == 0:
            box = (
                min(u[0], v[0]) <= min(a[0], b[0])
                and max(a[0], b[0]) <= max(u[0], v[0])
                and min(u[1], v[1]) <= min(a[1], b[1])
                and max(a[1], b[1]) <= max(u[1], v[1])
            )
            if box:
                return True
    return False


def _grow_minimal_convex_union(D, seed_edge, far_sign, blocked):
    """Minimal convex union of triangles of D meeting ``seed_edge`` from one side.

    Starts from the triangles attached to the far side of each unit piece of
    the edge and repeatedly adds triangles overlapping the interior of the
    current hull until the union is convex.  Every addition is forced, so the
    result is minimal.  Raises SubdivisionError if the growth hits a blocked
    triangle (already consumed by another cell) or cannot become convex.
    """
    pts = D.points
    idx = {p: i for i, p in enumerate(pts)}
    a, b = seed_edge
    seg = segment_points(a, b)
    members = set()
    for u, v in zip(seg, seg[1:]):
        e = {idx[u], idx[v]}
        found = None
        for t in sorted(D.triangles):
            if e <= set(t):
                o = next(k for k in t if k not in e)
                s = cross(a, b, pts[o])
                if s * far_sign > 0:
                    found = t
                    break
        if found is None:
            raise SubdivisionError(f"no triangle beyond edge piece {u}-{v}")
        members.add(found)

    while True:
        verts = sorted({v for t in members for v in t})
        hull = convex_hull([pts[v] for v in verts])
        if polygon_area2(hull) == len(members):
            break
        grew = False
        for t in sorted(D.triangles - members):
            tc = [pts[k] for k in t]
            if not convex_interiors_disjoint(tc, hull):
                members.add(t)
                grew = True
        if not grew:
            raise SubdivisionError(
                f"convex union across edge {a}-{b} cannot be completed"
            )
    if members & blocked:
        raise SubdivisionError(
            f"convex unions overlap across edge {a}-{b}"
        )
    return frozenset(members), LatticePolygon(hull)


def intermediate_subdivision(D, p):
    """Subdivision of D.polygon with the convex star of p as one cell.

    Implements the growth construction: starting from the star hull, every
    external cell edge of lattice length > 1 not on the boundary of the
    polygon is covered by the minimal convex union of triangles on its far
    side, recursively; the remaining triangles of D stay as unit cells.
    Regularity of the result is not asserted here.
    """
    st = star(D, p)
    if st.hull is None:
        raise SubdivisionError(f"star of {p} is not convex")
    P = D.polygon
    consumed = set(st.triangles)
    cells = [Cell(st.hull, frozenset(st.triangles), "Q_p")]
    queue = [(st.hull, None, "")]  # (cell polygon, seed edge, label prefix)
    child_count = 0
    while queue:
        poly, seed, prefix = queue.pop(0)
        branch = 0
        for a, b in poly.edges():
            if seed is not None and {a, b} == set(seed):
                continue
            if lattice_length(a, b) <= 1 or _on_polygon_boundary(P, a, b):
                continue
            branch += 1
            label = f"S_{prefix}{branch}" if prefix else f"S_{branch}"
            # the cell sits on the left of its CCW edge, so grow to the right
            members, hull_poly = _grow_minimal_convex_union(
                D, (a, b), far_sign=-1, blocked=frozenset(consumed)
            )
            shared = set(segment_points(a, b))
            got = set(lattice_points(hull_poly)) & set(lattice_points(poly))
            if got != shared:
                raise SubdivisionError(
                    f"union across {a}-{b} meets the cell beyond that edge"
                )
            consumed |= members
            cells.append(Cell(hull_poly, members, label))
            queue.append((hull_poly, (a, b), f"{prefix}{branch},"))
    for t in sorted(D.triangles - consumed):
        cells.append(Cell(triangle_polygon(D, t), frozenset([t])))
    sub = Subdivision(P, cells)
    reason = why_invalid_subdivision(sub)
    if reason is not None:
        raise SubdivisionError(reason)
    return sub


def why_invalid_subdivision(S):
    """First violated subdivision invariant, or None."""
    P = S.polygon
    total = 0
    for c in S.cells:
        for v in c.polygon.vertices:
            if P.contains(v) == 0:
                return f"cell vertex {v} outside the polygon"
        total += c.polygon.area2
    if total != P.area2:
        return f"cell areas sum to {total}, polygon has {P.area2}"
    for i in range(len(S.cells)):
        for j in range(i + 1, len(S.cells)):
            A = list(S.cells[i].polygon.vertices)
            B = list(S.cells[j].polygon.vertices)
            if not convex_interiors_disjoint(A, B):
                return f"cells {i} and {j} overlap"
    # face-to-face: every non-boundary cell edge is matched exactly once
    edge_count = {}
    for c in S.cells:
        for a, b in c.polygon.edges():
            if _on_polygon_boundary(P, a, b):
                continue
            key = tuple(sorted((a, b)))
            edge_count[key] = edge_count.get(key, 0) + 1
    for key, cnt in edge_count.items():
        if cnt != 2:
            return f"cell edge {key[0]}-{key[1]} is not shared by exactly two cells"
    return None


def refine(D1, D):
    """True iff the triangulation D refines the subdivision D1."""
    if D1.polygon != D.polygon:
        raise TriangulationError("subdivision and triangulation polygons differ")
    pts = D.points
    per_cell = [0] * len(D1.cells)
    for t in D.triangles:
        tc = [pts[i] for i in t]
        hosts = []
        for ci, c in enumerate(D1.cells):
            if all(c.polygon.contains(v) for v in tc):
                hosts.append(ci)
            elif not convex_interiors_disjoint(tc, list(c.polygon.vertices)):
                return False  # triangle straddles a cell boundary
        if len(hosts) != 1:
            return False
        per_cell[hosts[0]] += 1
    return all(
        per_cell[ci] == c.polygon.area2 for ci, c in enumerate(D1.cells)
    )


def canonical_key(D):
    """Equivalence-class key of a triangulated polygon.

    Minimal encoding of the triangle set over all transforms that realize
    the canonical form of the underlying polygon; two triangulations have
    equal keys iff an equiaffinity maps one complex onto the other.
    """
    best = None
    for T in canonical_transforms(D.polygon):
        enc = tuple(
            sorted(
                tuple(sorted(T(D.points[i]) for i in t)) for t in D.triangles
            )
        )
        if best is None or enc < best:
            best = enc
    return best


def equivalent_triangulations(D1, D2):
    """True iff the two triangulated polygons are lattice equivalent."""
    return canonical_key(D1) == canonical_key(D2)


def mirror_triangulation(D):
    """The reflection of D through x -> -x (not an equiaffinity: det -1).

    Lattice equivalence never quotients reflections, so a chiral complex and
    its mirror are distinct classes; this helper exists to detect exactly
    that situation when comparing against classifications stated up to reflection.
    """
    mpts = [(-x, y) for x, y in D.points]
    P2 = LatticePolygon.from_points(mpts)
    pts2 = lattice_points(P2)
    idx2 = {p: i for i, p in enumerate(pts2)}
    tris = [
        tuple(sorted(idx2[(-D.points[i][0], D.points[i][1])] for i in t))
        for t in D.triangles
    ]
    return Triangulation(P2, tris)


def canonical_key_gl(D):
    """Class key insensitive to reflections (the coarser GL equivalence)."""
    return min(canonical_key(D), canonical_key(mirror_triangulation(D)))
