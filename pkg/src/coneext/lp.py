"""Exact rational linear programming with self-verifying certificates.

Two-phase primal simplex over Fractions with Bland's rule, so every run
terminates and identical problems pivot identically.  No floating point,
no presolve.  Every outcome is re-verified against the original problem
before it is returned:

* feasible: the point satisfies every row exactly (and the optimum, when
  an objective is present, equals objective . point);
* infeasible: Farkas multipliers (free on equality rows, nonnegative on
  inequality rows) combine the rows into ``r . x >= rho`` with ``rho > 0``
  while ``r`` is nonpositive on nonnegative variables and zero on free
  ones, which no point can satisfy;
* unbounded: a feasible point plus a recession direction that keeps all
  rows satisfied while the objective decreases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import dot, primitive, vec

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """min objective . x  subject to  eq rows (= rhs), ge rows (>= rhs),
    x_j >= 0 for j in nonneg, remaining variables free."""

    num_vars: int
    eq_rows: tuple
    ge_rows: tuple
    nonneg: frozenset
    objective: tuple | None = None

    @staticmethod
    def build(num_vars, eq_rows=(), ge_rows=(), nonneg=(), objective=None):
        eqs = tuple((vec(r), Fraction(b)) for r, b in eq_rows)
        ges = tuple((vec(r), Fraction(b)) for r, b in ge_rows)
        for r, _ in eqs + ges:
            if len(r) != num_vars:
                raise ValueError("row length does not match num_vars")
        obj = vec(objective) if objective is not None else None
        if obj is not None and len(obj) != num_vars:
            raise ValueError("objective length does not match num_vars")
        return LpProblem(num_vars, eqs, ges, frozenset(nonneg), obj)


@dataclass(frozen=True)
class LpOutcome:
    status: str
    point: tuple | None = None
    certificate: tuple | None = None  # Farkas multipliers: eq rows then ge rows
    optimum: Fraction | None = None
    ray: tuple | None = None          # recession direction when unbounded


def verify_point(problem, point):
    if len(point) != problem.num_vars:
        raise AssertionError("point arity mismatch")
    for r, b in problem.eq_rows:
        if dot(r, point) != b:
            raise AssertionError("equality row violated")
    for r, b in problem.ge_rows:
        if dot(r, point) < b:
            raise AssertionError("inequality row violated")
    for j in problem.nonneg:
        if point[j] < 0:
            raise AssertionError("sign constraint violated")


def verify_farkas(problem, mult):
    ne = len(problem.eq_rows)
    if len(mult) != ne + len(problem.ge_rows):
        raise AssertionError("multiplier arity mismatch")
    for lam in mult[ne:]:
        if lam < 0:
            raise AssertionError("inequality multiplier must be nonnegative")
    combined = [Fraction(0)] * problem.num_vars
    rho = Fraction(0)
    for lam, (r, b) in zip(mult, problem.eq_rows + problem.ge_rows):
        if lam == 0:
            continue
        for j, a in enumerate(r):
            combined[j] += lam * a
        rho += lam * b
    if rho <= 0:
        raise AssertionError("Farkas combination has nonpositive rhs")
    for j, a in enumerate(combined):
        if j in problem.nonneg:
            if a > 0:
                raise AssertionError("Farkas row positive on a nonnegative variable")
        elif a != 0:
            raise AssertionError("Farkas row nonzero on a free variable")


def verify_ray(problem, point, ray):
    verify_point(problem, point)
    for r, _ in problem.eq_rows:
        if dot(r, ray) != 0:
            raise AssertionError("ray leaves an equality row")
    for r, _ in problem.ge_rows:
        if dot(r, ray) < 0:
            raise AssertionError("ray leaves an inequality row")
    for j in problem.nonneg:
        if ray[j] < 0:
            raise AssertionError("ray leaves the sign orthant")
    if problem.objective is None or dot(problem.objective, ray) >= 0:
        raise AssertionError("ray does not improve the objective")


class _Tableau:
    """Dense simplex tableau.  Columns are described by tags:
    ("var", j, s) for s * x_j of a split variable, ("sur", i) for the surplus
    of ge row i, ("art", i) for the artificial of standard row i."""

    def __init__(self, problem):
        self.problem = problem
        ne = len(problem.eq_rows)
        rows = [(r, b, None) for r, b in problem.eq_rows]
        rows += [(r, b, i) for i, (r, b) in enumerate(problem.ge_rows)]
        self.cols = []
        for j in range(problem.num_vars):
            self.cols.append(("var", j, 1))
            if j not in problem.nonneg:
                self.cols.append(("var", j, -1))
        self.sur0 = len(self.cols)
        for i in range(len(problem.ge_rows)):
            self.cols.append(("sur", i))
        nstruct = len(self.cols)
        # a ge row with nonpositive rhs is flipped so its surplus column can
        # start basic; only the remaining rows need artificial variables
        self.art_of_row = {}
        for ridx, (r, b, surplus) in enumerate(rows):
            if surplus is None or b > 0:
                self.art_of_row[ridx] = len(self.art_of_row)
        self.nart = len(self.art_of_row)
        for ridx in sorted(self.art_of_row, key=self.art_of_row.get):
            self.cols.append(("art", ridx))
        self.sigma = []
        self.rhs = []
        self.T = []
        self.basis = []
        for ridx, (r, b, surplus) in enumerate(rows):
            if surplus is not None and b <= 0:
                sg = -1
            else:
                sg = -1 if b < 0 else 1
            self.sigma.append(sg)
            row = []
            for tag in self.cols[:nstruct]:
                if tag[0] == "var":
                    _, j, s = tag
                    row.append(sg * s * r[j])
                else:
                    _, i = tag
                    row.append(Fraction(-sg) if surplus == i else Fraction(0))
            art = self.art_of_row.get(ridx)
            row += [Fraction(int(art == i)) for i in range(self.nart)]
            self.T.append(row)
            self.rhs.append(sg * b)
            if art is not None:
                self.basis.append(nstruct + art)
            else:
                self.basis.append(self.sur0 + surplus)
        self.banned = set()

    def set_costs(self, costs):
        # reduced-cost row and objective value for the current basis
        z = list(costs)
        val = Fraction(0)
        for i, bcol in enumerate(self.basis):
            cb = costs[bcol]
            if cb == 0:
                continue
            val += cb * self.rhs[i]
            row = self.T[i]
            for j in range(len(z)):
                if row[j] != 0:
                    z[j] -= cb * row[j]
        self.z = z
        self.value = val

    def pivot(self, r, c):
        row = self.T[r]
        pv = row[c]
        inv = 1 / pv
        self.T[r] = row = [a * inv for a in row]
        self.rhs[r] *= inv
        for i, other in enumerate(self.T):
            if i != r and other[c] != 0:
                f = other[c]
                self.T[i] = [a if b == 0 else a - f * b
                             for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        f = self.z[c]
        if f != 0:
            self.z = [a if b == 0 else a - f * b for a, b in zip(self.z, row)]
            self.value += f * self.rhs[r]
        self.basis[r] = c

    def run(self):
        """Bland-rule iterations; returns "optimal" or "unbounded"."""
        while True:
            enter = None
            for c in range(len(self.cols)):
                if c not in self.banned and self.z[c] < 0:
                    enter = c
                    break
            if enter is None:
                return "optimal"
            leave = None
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                self.unbounded_col = enter
                return "unbounded"
            self.pivot(leave, enter)

    def extract_point(self):
        x = [Fraction(0)] * self.problem.num_vars
        for i, bcol in enumerate(self.basis):
            tag = self.cols[bcol]
            if tag[0] == "var":
                _, j, s = tag
                x[j] += s * self.rhs[i]
        return tuple(x)

    def extract_ray(self, enter):
        d = [Fraction(0)] * self.problem.num_vars
        tag = self.cols[enter]
        if tag[0] == "var":
            d[tag[1]] += tag[2]
        for i, bcol in enumerate(self.basis):
            btag = self.cols[bcol]
            if btag[0] == "var":
                _, j, s = btag
                d[j] -= s * self.T[i][enter]
        return tuple(d)


def solve(problem):
    """Exact two-phase simplex.  Deterministic; outcome verified before return."""
    tab = _Tableau(problem)
    nart = tab.nart
    art0 = len(tab.cols) - nart
    costs = [Fraction(0)] * art0 + [Fraction(1)] * nart
    tab.set_costs(costs)
    status = tab.run()
    assert status == "optimal", "phase 1 is bounded below by zero"
    if tab.value > 0:
        mult = []
        ne = len(problem.eq_rows)
        nrows = ne + len(problem.ge_rows)
        for i in range(nrows):
            art = tab.art_of_row.get(i)
            if art is not None:
                y = 1 - tab.z[art0 + art]
            else:
                y = -tab.z[tab.sur0 + (i - ne)]
            mult.append(tab.sigma[i] * y)
        cert = tuple(mult)
        verify_farkas(problem, cert)
        return LpOutcome(status=INFEASIBLE, certificate=cert)

    # drive leftover artificials out of the basis, dropping redundant rows
    for i in range(len(tab.basis) - 1, -1, -1):
        bcol = tab.basis[i]
        if tab.cols[bcol][0] != "art":
            continue
        pivot_col = next((c for c in range(art0) if tab.T[i][c] != 0), None)
        if pivot_col is None:
            del tab.T[i]
            del tab.rhs[i]
            del tab.basis[i]
        else:
            tab.pivot(i, pivot_col)
    tab.banned = set(range(art0, len(tab.cols)))

    if problem.objective is None:
        point = tab.extract_point()
        verify_point(problem, point)
        return LpOutcome(status=FEASIBLE, point=point)

    costs = [Fraction(0)] * len(tab.cols)
    for c, tag in enumerate(tab.cols):
        if tag[0] == "var":
            _, j, s = tag
            costs[c] = s * problem.objective[j]
    tab.set_costs(costs)
    status = tab.run()
    if status == "unbounded":
        point = tab.extract_point()
        ray = tab.extract_ray(tab.unbounded_col)
        verify_ray(problem, point, ray)
        return LpOutcome(status=UNBOUNDED, point=point, ray=ray)
    point = tab.extract_point()
    verify_point(problem, point)
    optimum = dot(problem.objective, point)
    assert optimum == tab.value
    return LpOutcome(status=FEASIBLE, point=point, optimum=optimum)


@dataclass(frozen=True)
class ConicOutcome:
    member: bool
    weights: tuple | None = None      # aligned with the generator list
    separating: tuple | None = None   # h with h(target) < 0 <= h(generator)


def conic_membership(target, generators):
    """Exact membership of ``target`` in the cone spanned by ``generators``.

    Member: nonnegative weights whose combination re-sums to the target
    exactly.  Non-member: a separating functional derived from the Farkas
    certificate, normalized to a primitive integer vector.
    """
    target = vec(target)
    gens = [vec(g) for g in generators]
    n = len(target)
    for g in gens:
        if len(g) != n:
            raise ValueError("generator dimension mismatch")
    eq_rows = [(tuple(g[i] for g in gens), target[i]) for i in range(n)]
    problem = LpProblem.build(len(gens), eq_rows=eq_rows, nonneg=range(len(gens)))
    out = solve(problem)
    if out.status == FEASIBLE:
        weights = out.point
        total = [Fraction(0)] * n
        for w, g in zip(weights, gens):
            for i, a in enumerate(g):
                total[i] += w * a
        assert tuple(total) == target, "decomposition does not re-sum"
        return ConicOutcome(member=True, weights=weights)
    assert out.status == INFEASIBLE
    h = primitive([-lam for lam in out.certificate])
    if dot(h, target) >= 0 or any(dot(h, g) < 0 for g in gens):
        raise AssertionError("separating functional failed verification")
    return ConicOutcome(member=False, separating=h)
