"""Exact rational linear programming and Fourier-Motzkin elimination.

The single LP shape used by the regularity checks is slack maximization:
maximize t subject to G x >= t on every row and 0 <= t <= 1, with x free.
Everything is done in Fraction arithmetic; no tolerances exist anywhere.
"""

from fractions import Fraction
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def nullspace_substitution(eq_rows, nvars):
    """Row-reduce the homogeneous system eq_rows . h = 0.

    Returns (free_cols, expand) where expand maps an assignment of the free
    variables (list in free_cols order) to the full solution vector.
    """
    rows = [list(map(Fraction, r)) for r in eq_rows]
    pivots = {}
    r = 0
    for col in range(nvars):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        fac = rows[r][col]
        rows[r] = [v / fac for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
    free_cols = [c for c in range(nvars) if c not in pivots]

    def expand(free_vals):
        h = [ZERO] * nvars
        for c, v in zip(free_cols, free_vals):
            h[c] = Fraction(v)
        for col, ri in pivots.items():
            h[col] = -sum(rows[ri][c] * h[c] for c in free_cols)
        return h

    return free_cols, expand


class _Tableau:
    """Dense simplex tableau with Bland's rule (exact, anticycling)."""

    def __init__(self, A, b, c, basis):
        self.A = A
        self.b = b
        self.c = c
        self.basis = basis
        self.m = len(A)
        self.n = len(c)

    def _reduced_cost(self, j):
        return self.c[j] - sum(self.c[self.basis[i]] * self.A[i][j] for i in range(self.m))

    def solve(self):
        while True:
            enter = None
            for j in range(self.n):
                if j in self.basis:
                    continue
                if self._reduced_cost(j) > 0:
                    enter = j
                    break
            if enter is None:
                break
            leave = None
            best = None
            for i in range(self.m):
                a = self.A[i][enter]
                if a > 0:
                    ratio = self.b[i] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                raise ArithmeticError("unbounded LP; the slack cap should prevent this")
            self._pivot(leave, enter)
        x = [ZERO] * self.n
        for i in range(self.m):
            x[self.basis[i]] = self.b[i]
        obj = sum(self.c[j] * x[j] for j in range(self.n))
        return obj, x

    def _pivot(self, row, col):
        piv = self.A[row][col]
        self.A[row] = [v / piv for v in self.A[row]]
        self.b[row] /= piv
        for i in range(self.m):
            if i != row and self.A[i][col] != 0:
                f = self.A[i][col]
                self.A[i] = [a - f * p for a, p in zip(self.A[i], self.A[row])]
                self.b[i] -= f * self.b[row]
        self.basis[row] = col


def maximize_slack(strict_rows, eq_rows, nvars):
    """Maximize t subject to row . h >= t, eq . h = 0, 0 <= t <= 1.

    Returns (t_opt, h) with h an exact optimal solution of the original
    variables.  The zero vector with t = 0 is always feasible, so t_opt >= 0;
    strict feasibility of the system row . h > 0 is equivalent to t_opt > 0.
    """
    free_cols, expand = nullspace_substitution(eq_rows, nvars)
    f = len(free_cols)
    # solution-space basis vectors, one per free variable
    span = []
    for k in range(f):
        unit = [ZERO] * f
        unit[k] = ONE
        span.append(expand(unit))
    reduced = []
    for row in strict_rows:
        row = list(map(Fraction, row))
        g = [sum(r * v for r, v in zip(row, h)) for h in span]
        reduced.append(g)

    m = len(reduced)
    # columns: x+ (f), x- (f), t, slacks s (m), cap slack u
    ncols = 2 * f + 1 + m + 1
    t_col = 2 * f
    A = []
    b = []
    basis = []
    for i, g in enumerate(reduced):
        row = [ZERO] * ncols
        for k in range(f):
            row[k] = -g[k]
            row[f + k] = g[k]
        row[t_col] = ONE
        row[2 * f + 1 + i] = ONE
        A.append(row)
        b.append(ZERO)
        basis.append(2 * f + 1 + i)
    cap = [ZERO] * ncols
    cap[t_col] = ONE
    cap[-1] = ONE
    A.append(cap)
    b.append(ONE)
    basis.append(ncols - 1)
    c = [ZERO] * ncols
    c[t_col] = ONE
    t_opt, x = _Tableau(A, b, c, basis).solve()
    free_vals = [x[k] - x[f + k] for k in range(f)]
    return t_opt, expand(free_vals)


def _int_rows(rows):
    """Scale rational rows to coprime integer rows."""
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in fr]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(tuple(ints))
    return out


def fm_strictly_feasible(rows, nvars):
    """Fourier-Motzkin decision for the strict homogeneous system row . h > 0.

    Eliminates variables one by one (cheapest first); any derived row that is
    identically zero certifies infeasibility (it reads 0 > 0).  Exact for
    strict systems, exponential in the worst case; meant for small instances
    and as an independent cross-check of the simplex route.
    """
    work = set()
    for row in _int_rows(rows):
        if not any(row):
            return False
        work.add(row)
    remaining = list(range(nvars))
    while remaining:
        best_var = None
        best_cost = None
        for v in remaining:
            pos = sum(1 for r in work if r[v] > 0)
            neg = sum(1 for r in work if r[v] < 0)
            cost = pos * neg - (pos + neg)
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_var = v
        v = best_var
        remaining.remove(v)
        pos = [r for r in work if r[v] > 0]
        neg = [r for r in work if r[v] < 0]
        zero = [r for r in work if r[v] == 0]
        new = set(zero)
        for p in pos:
            for q in neg:
                comb = tuple(
                    (-q[v]) * a + p[v] * b for a, b in zip(p, q)
                )
                if not any(comb):
                    return False
                g = 0
                for val in comb:
                    g = gcd(g, abs(val))
                if g > 1:
                    comb = tuple(val // g for val in comb)
                new.add(comb)
        work = new
    return True
