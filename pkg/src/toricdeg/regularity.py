"""Regularity of triangulations and subdivisions via exact LP feasibility.

A complex is regular when a strictly convex piecewise linear lift exists.
Strict convexity is one inequality per interior edge ("fold"); cells with
more than three lattice points additionally force affine flatness.  The
decision is made by exact rational slack maximization: the system is
regular iff the optimal slack is positive.  No epsilons: everything is a
Fraction.
"""

from fractions import Fraction
from typing import NamedTuple, Optional

from .geometry import cross, lattice_length
from .lp import ZERO, ONE, fm_strictly_feasible, maximize_slack
from .polygon import lattice_points
from .triangulation import (
    Cell,
    Subdivision,
    Triangulation,
    _on_polygon_boundary,
    triangle_polygon,
)


class LiftingFunction:
    """Exact rational heights on the lattice points of a polygon."""

    def __init__(self, heights):
        self.heights = {p: Fraction(v) for p, v in heights.items()}

    def __call__(self, p):
        return self.heights[p]

    def shifted(self, c):
        c = Fraction(c)
        return LiftingFunction({p: v + c for p, v in self.heights.items()})

    def items(self):
        return sorted(self.heights.items())

    def __repr__(self):
        return f"LiftingFunction({self.heights})"


class FoldConstraint(NamedTuple):
    apex: int                 # point index
    base: tuple               # three point indices spanning the cell's plane
    coeffs: tuple             # affine coordinates of apex w.r.t. base

    def value(self, heights_by_index):
        """h(apex) - sum(coeff * h(base)); positive means strictly convex."""
        lam = self.coeffs
        return heights_by_index[self.apex] - sum(
            l * heights_by_index[b] for l, b in zip(lam, self.base)
        )


class FoldSystem(NamedTuple):
    strict: list     # FoldConstraint, one per interior edge
    flat: list       # FoldConstraint treated as equalities (cell flatness)


class RegularityResult(NamedTuple):
    regular: bool
    witness: Optional[LiftingFunction]

    def __bool__(self):
        return self.regular


def _affine_coords(p, base_pts):
    """Exact affine coordinates of p in terms of three independent points."""
    (x1, y1), (x2, y2), (x3, y3) = base_pts
    det = cross((x1, y1), (x2, y2), (x3, y3))
    l2 = Fraction(cross((x1, y1), p, (x3, y3)), det)
    l3 = Fraction(cross((x1, y1), (x2, y2), p), det)
    l1 = ONE - l2 - l3
    return (l1, l2, l3)


def _cells_of(X):
    """Cells of a complex as (lattice point indices, polygon vertex indices)."""
    pts = X.points
    idx = {p: i for i, p in enumerate(pts)}
    cells = []
    if isinstance(X, Triangulation):
        for t in X.triangle_list():
            cells.append((list(t), list(t)))
    elif isinstance(X, Subdivision):
        for c in X.cells:
            members = sorted(idx[p] for p in lattice_points(c.polygon))
            verts = [idx[v] for v in c.polygon.vertices]
            cells.append((members, verts))
    else:
        raise TypeError(f"expected Triangulation or Subdivision, got {type(X)!r}")
    return cells


def _base_of(cell_points, pts):
    """First three affinely independent lattice points of a cell."""
    a, b = cell_points[0], cell_points[1]
    for c in cell_points[2:]:
        if cross(pts[a], pts[b], pts[c]) != 0:
            return (a, b, c)
    raise ValueError("degenerate cell")


def fold_constraints(X):
    """Strict fold inequalities and flatness equalities of a complex.

    One strict constraint per interior edge: the lift of a vertex of one
    neighbour must lie strictly above the affine span of the other's lift.
    Cells with more than three lattice points contribute equalities pinning
    all their points to a single affine function.
    """
    pts = X.points
    cells = _cells_of(X)
    edge_map = {}
    for ci, (_, verts) in enumerate(cells):
        n = len(verts)
        for k in range(n):
            e = tuple(sorted((verts[k], verts[(k + 1) % n])))
            edge_map.setdefault(e, []).append(ci)
    strict = []
    for e, owners in sorted(edge_map.items()):
        if len(owners) == 1:
            continue
        c1, c2 = owners
        base = _base_of(cells[c1][0], pts)
        apex = min(v for v in cells[c2][1] if v not in e)
        strict.append(FoldConstraint(apex, base, _affine_coords(pts[apex], [pts[b] for b in base])))
    flat = []
    for members, _ in cells:
        if len(members) <= 3:
            continue
        base = _base_of(members, pts)
        for q in members:
            if q in base:
                continue
            flat.append(FoldConstraint(q, base, _affine_coords(pts[q], [pts[b] for b in base])))
    return FoldSystem(strict=strict, flat=flat)


def _constraint_row(fc, nvars):
    row = [ZERO] * nvars
    row[fc.apex] += ONE
    for l, b in zip(fc.coeffs, fc.base):
        row[b] -= l
    return row


def _gauge_pins(pts):
    """Indices of three affinely independent points, fixed to height zero."""
    for k in range(2, len(pts)):
        if cross(pts[0], pts[1], pts[k]) != 0:
            return (0, 1, k)
    raise ValueError("all lattice points collinear")


def is_regular(X):
    """Decide regularity; on success the witness is a positive lifting function.

    Slack maximization: maximize t with every fold >= t, flatness equalities,
    three heights pinned to zero and t <= 1.  Regular iff the optimum is
    strictly positive.
    """
    pts = X.points
    n = len(pts)
    system = fold_constraints(X)
    strict_rows = [_constraint_row(fc, n) for fc in system.strict]
    eq_rows = [_constraint_row(fc, n) for fc in system.flat]
    for i in _gauge_pins(pts):
        row = [ZERO] * n
        row[i] = ONE
        eq_rows.append(row)
    t_opt, h = maximize_slack(strict_rows, eq_rows, n)
    if t_opt <= 0:
        return RegularityResult(False, None)
    low = min(h)
    F = LiftingFunction({p: v + (ONE - low) for p, v in zip(pts, h)})
    assert all(fc.value({i: F(p) for i, p in enumerate(pts)}) > 0 for fc in system.strict)
    return RegularityResult(True, F)


def is_regular_fm(X):
    """Independent regularity decision by strict Fourier-Motzkin elimination."""
    pts = X.points
    n = len(pts)
    system = fold_constraints(X)
    # flatness equalities cannot be fed to a strict-inequality eliminator, so
    # they are substituted away exactly before the elimination runs
    from .lp import nullspace_substitution

    eq_rows = [_constraint_row(fc, n) for fc in system.flat]
    for i in _gauge_pins(pts):
        row = [ZERO] * n
        row[i] = ONE
        eq_rows.append(row)
    free_cols, expand = nullspace_substitution(eq_rows, n)
    span = []
    for k in range(len(free_cols)):
        unit = [ZERO] * len(free_cols)
        unit[k] = ONE
        span.append(expand(unit))
    rows = []
    for fc in system.strict:
        full = _constraint_row(fc, n)
        rows.append([sum(r * v for r, v in zip(full, h)) for h in span])
    if not rows:
        return True
    return fm_strictly_feasible(rows, len(free_cols))


def witness_is_sound(X, F):
    """Exact check that F satisfies every fold strictly and flatness exactly."""
    pts = X.points
    heights = {i: F(p) for i, p in enumerate(pts)}
    system = fold_constraints(X)
    if any(fc.value(heights) <= 0 for fc in system.strict):
        return False
    return all(fc.value(heights) == 0 for fc in system.flat)


def _subdivision_with_cell(D, Q):
    """The subdivision {Q} plus the remaining triangles of D as unit cells."""
    members = Q.member_triangles
    if members is None:
        members = frozenset(
            t for t in D.triangles
            if all(Q.polygon.contains(D.points[i]) for i in t)
        )
    cells = [Cell(Q.polygon, frozenset(members), "Q")]
    for t in sorted(D.triangles - set(members)):
        cells.append(Cell(triangle_polygon(D, t), frozenset([t])))
    return Subdivision(D.polygon, cells)


def flatten_lifting(F, D, Q):
    """Flatten a witness of D over the cell Q, giving a witness for {Q} + rest.

    Requires every edge of Q to have lattice length one or to lie on the
    boundary of the polygon (the constructively proven case).  Follows the
    recipe: heights are re-chosen so that the ring of Q is at 1, the interior
    point of Q at 1 - eps, and everything off Q large; the returned function
    raises the interior point to 1, making the lift affine over Q.
    """
    P = D.polygon
    if Q.polygon == P:
        return LiftingFunction({p: ONE for p in D.points})
    if Q.polygon.area2 == 1:
        # single triangle of D: just re-gauge F to be 1 on its vertices
        vs = Q.polygon.vertices
        (x1, y1), (x2, y2), (x3, y3) = vs
        det = cross(vs[0], vs[1], vs[2])
        # affine l(x, y) = a*x + b*y + c with (F + l)(v) = 1 on the vertices
        targets = [ONE - F(v) for v in vs]
        a = Fraction(
            targets[0] * (y2 - y3) + targets[1] * (y3 - y1) + targets[2] * (y1 - y2), det
        )
        b = Fraction(
            targets[0] * (x3 - x2) + targets[1] * (x1 - x3) + targets[2] * (x2 - x1), det
        )
        c = targets[0] - a * x1 - b * y1
        return LiftingFunction({p: F(p) + a * p[0] + b * p[1] + c for p in D.points})
    for a, b in Q.polygon.edges():
        if lattice_length(a, b) > 1 and not _on_polygon_boundary(P, a, b):
            raise ValueError(
                f"cell edge {a}-{b} has length > 1 and is interior: flattening unproven"
            )
    pts = D.points
    n = len(pts)
    q_points = set(lattice_points(Q.polygon))
    inner = [p for p in q_points if Q.polygon.contains(p) == 2]
    ring = sorted(q_points - set(inner))
    system = fold_constraints(D)
    nv = n + 1  # last variable: eps
    eps_col = n
    rows = [(_constraint_row(fc, n) + [ZERO], ZERO) for fc in system.strict]
    eq_rows = []
    for p in ring:
        row = [ZERO] * nv
        row[pts.index(p)] = ONE
        eq_rows.append((row, ONE))
    for p in inner:
        row = [ZERO] * nv
        row[pts.index(p)] = ONE
        row[eps_col] = ONE
        eq_rows.append((row, ONE))  # h(p) + eps = 1
    for i, p in enumerate(pts):
        if p in q_points:
            continue
        row = [ZERO] * nv
        row[i] = ONE
        rows.append((row, Fraction(2)))  # h(i) - 2 >= t, i.e. well clear of the cell
    row = [ZERO] * nv
    row[eps_col] = ONE
    rows.append((row, ZERO))  # eps >= t
    t_opt, sol = _maximize_slack_affine(rows, eq_rows, nv)
    if t_opt <= 0:
        raise ValueError("flattening recipe failed to produce a lifting function")
    heights = {}
    for i, p in enumerate(pts):
        heights[p] = ONE if p in inner else sol[i]
    out = LiftingFunction(heights)
    assert witness_is_sound(_subdivision_with_cell(D, Q), out)
    return out


def _maximize_slack_affine(rows, eq_rows, nvars):
    """Slack maximization with affine constraints.

    rows: (coeff_row, const) meaning coeff . h - const >= t.
    eq_rows: (coeff_row, const) meaning coeff . h = const.
    Homogenized with one extra coordinate w; the affine slice w = 1 is
    parameterized by a particular solution plus a nullspace basis, and the
    homogeneous slack solver finishes the job.
    """
    from .lp import nullspace_substitution

    aug = nvars + 1
    eq_aug = [list(row) + [-Fraction(const)] for row, const in eq_rows]
    free_cols, expand = nullspace_substitution(eq_aug, aug)
    span = []
    for k in range(len(free_cols)):
        unit = [ZERO] * len(free_cols)
        unit[k] = ONE
        span.append(expand(unit))
    pivot_k = next((k for k, h in enumerate(span) if h[-1] != 0), None)
    if pivot_k is None:
        raise ValueError("equalities are inconsistent")
    h0 = [v / span[pivot_k][-1] for v in span[pivot_k]]
    basis = []
    for k, h in enumerate(span):
        if k != pivot_k:
            f = h[-1]
            basis.append([a - f * b for a, b in zip(h, h0)])
    rows2 = []
    for row, const in rows:
        full = list(row) + [-Fraction(const)]
        c0 = sum(r * v for r, v in zip(full, h0))
        g = [sum(r * v for r, v in zip(full, hb)) for hb in basis]
        rows2.append(g + [c0])
    t_opt, mix = _slack_with_unit(rows2, len(basis))
    h = [a + sum(m * hb[i] for m, hb in zip(mix, basis)) for i, a in enumerate(h0)]
    return t_opt, h[:nvars]


def _slack_with_unit(rows, nfree):
    """maximize t s.t. g . x + c >= t, t <= 1, where rows are (g..., c)."""
    from .lp import _Tableau

    m = len(rows)
    ncols = 2 * nfree + 1 + m + 1
    t_col = 2 * nfree
    A = []
    b = []
    basis = []
    feasible_shift = min([row[-1] for row in rows] + [ZERO])
    # start from x = 0, t = min(0, smallest constant): rewrite t' = t - shift
    for i, row in enumerate(rows):
        g = row[:-1]
        c = row[-1]
        arow = [ZERO] * ncols
        for k in range(nfree):
            arow[k] = -g[k]
            arow[nfree + k] = g[k]
        arow[t_col] = ONE
        arow[2 * nfree + 1 + i] = ONE
        A.append(arow)
        b.append(c - feasible_shift)
        basis.append(2 * nfree + 1 + i)
    cap = [ZERO] * ncols
    cap[t_col] = ONE
    cap[-1] = ONE
    A.append(cap)
    b.append(ONE - feasible_shift)
    basis.append(ncols - 1)
    c_obj = [ZERO] * ncols
    c_obj[t_col] = ONE
    t_shifted, x = _Tableau(A, b, c_obj, basis).solve()
    t_opt = t_shifted + feasible_shift
    sol = [x[k] - x[nfree + k] for k in range(nfree)]
    return t_opt, sol
