"""Regenerate the shipped fixture files under src/coneext/fixtures/.

Deterministic: cones and polytopes come from the fixture builders, the gap
points from a seeded boundary search.  The gap points are found by shooting
a ray from a product interior point along a random direction, maximizing
the step length subject to level-k membership of the skewed square pair;
the optimum lands on the boundary of the level-k cone and is kept when it
lies outside the minimal tensor product (re-sampled otherwise).

Run from the repository root:  python3 tools/make_fixtures.py
"""

import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from coneext.cones import interior_point
from coneext.fixtures import (CONE_BUILDERS, CONE_PHIS, POLYTOPE_BUILDERS,
                              based_cone, square_cone)
from coneext.formats import (serialize_cone_file, serialize_point_file,
                             serialize_polytope_file)
from coneext.hierarchy import (apply_reduction, ext_k_membership,
                               min_tensor_generators, point_tensor)
from coneext.lp import FEASIBLE, LpProblem, conic_membership, solve
from coneext.tensors import (DUAL, basis_vector, from_vector, kron, pairing,
                             sym_basis)

SEED = 20260821
OUT = Path(__file__).resolve().parent.parent / "src" / "coneext" / "fixtures"


def write(name, text):
    (OUT / name).write_text(text)
    print("wrote", name)


def shoot_boundary(a_cone, based, k, x0, d):
    """Maximize t with x0 + t*d in the level-k cone; returns (t, entries)
    or None when the direction is infeasible from the start."""
    nA, nB = a_cone.dim, based.cone.dim
    sym = sym_basis(nB, k)
    cols = [kron(basis_vector(nA, i), s) for i in range(nA) for s in sym]
    reduced = [apply_reduction(c, based, k) for c in cols]
    nv = len(cols) + 1
    ge_rows = []
    for f in a_cone.facets:
        fa = from_vector(f, DUAL)
        for combo in itertools.combinations_with_replacement(based.cone.facets, k):
            h = kron(fa, *(from_vector(g, DUAL) for g in combo))
            ge_rows.append((tuple(pairing(h, c) for c in cols) + (Fraction(0),),
                            Fraction(0)))
    eq_rows = []
    for i in range(nA):
        for j in range(nB):
            eq_rows.append((tuple(rc[i, j] for rc in reduced) + (-d[i * nB + j],),
                            x0[i * nB + j]))
    objective = tuple([Fraction(0)] * len(cols) + [Fraction(-1)])
    out = solve(LpProblem.build(nv, eq_rows=eq_rows, ge_rows=ge_rows,
                                objective=objective))
    if out.status != FEASIBLE:
        return None
    t = out.point[-1]
    entries = tuple(x0[i] + t * d[i] for i in range(nA * nB))
    return t, entries


def find_gap_point(k, rng):
    sq = square_cone()
    based = based_cone("square-skew")
    s = interior_point(sq)
    x0 = tuple(Fraction(a) * Fraction(b) for a in s for b in s)
    gens = [tuple(g.entries) for g in min_tensor_generators(sq, sq)]
    while True:
        d = tuple(Fraction(rng.randint(-3, 3)) for _ in range(9))
        got = shoot_boundary(sq, based, k, x0, d)
        if got is None:
            continue
        t, entries = got
        if t <= 0:
            continue
        if conic_membership(entries, gens).member:
            continue
        # confirm the certificates the acceptance checks will re-derive
        x = point_tensor(sq, sq, entries)
        assert ext_k_membership(x, sq, based, k).member
        return entries


def main():
    OUT.mkdir(exist_ok=True)
    for name, build in CONE_BUILDERS.items():
        cone = build()
        write(f"{name}.cone",
              serialize_cone_file(name, cone.rays, CONE_PHIS[name]))
    sq = square_cone()
    write("square-skew.cone",
          serialize_cone_file("square-skew", sq.rays, CONE_PHIS["square-skew"]))
    for name, build in POLYTOPE_BUILDERS.items():
        write(f"{name}.poly", serialize_polytope_file(name, build().vertices))

    write("box.pt", serialize_point_file(
        "box", (3, 3), [Fraction(v) for v in (2, 0, 0, 0, 1, 1, 0, 1, -1)]))
    write("box-interior.pt", serialize_point_file(
        "box-interior", (3, 3),
        [Fraction(v) for v in (3, 0, 0, 0, 1, 1, 0, 1, -1)]))

    rng = random.Random(SEED)
    for k in (2, 3):
        entries = find_gap_point(k, rng)
        write(f"gap-k{k}.pt", serialize_point_file(f"gap-k{k}", (3, 3), entries))


if __name__ == "__main__":
    main()
