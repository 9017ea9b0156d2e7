"""Exact simplex: verified points, Farkas refutations, conic membership."""

import random
from fractions import Fraction

from coneext.linalg import dot, vec
from coneext.lp import (FEASIBLE, INFEASIBLE, UNBOUNDED, LpProblem,
                        conic_membership, solve, verify_farkas, verify_point,
                        verify_ray)


def test_minimize_simple_bound():
    p = LpProblem.build(1, ge_rows=[((1,), 3)], nonneg=(0,), objective=(1,))
    out = solve(p)
    assert out.status == FEASIBLE
    assert out.optimum == 3
    assert out.point == (3,)


def test_infeasible_with_farkas_certificate():
    p = LpProblem.build(1, ge_rows=[((-1,), 1)], nonneg=(0,))
    out = solve(p)
    assert out.status == INFEASIBLE
    verify_farkas(p, out.certificate)


def test_unbounded_with_ray():
    p = LpProblem.build(1, ge_rows=[((1,), 0)], nonneg=(0,), objective=(-1,))
    out = solve(p)
    assert out.status == UNBOUNDED
    verify_ray(p, out.point, out.ray)


def test_free_variable_optimum():
    p = LpProblem.build(1, ge_rows=[((1,), -5)], objective=(1,))
    out = solve(p)
    assert out.status == FEASIBLE
    assert out.optimum == -5


def test_equality_system_feasibility():
    p = LpProblem.build(
        2,
        eq_rows=[((1, 1), 3), ((1, -1), 1)],
    )
    out = solve(p)
    assert out.status == FEASIBLE
    assert out.point == (2, 1)
    verify_point(p, out.point)


def test_square_cone_membership_by_hand():
    rays = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)]
    target = (2, 0, 0)
    out = conic_membership(vec(target), [vec(r) for r in rays])
    assert out.member
    total = (0, 0, 0)
    for w, r in zip(out.weights, rays):
        assert w >= 0
        total = tuple(t + w * c for t, c in zip(total, r))
    assert total == target


def test_conic_target_is_generator():
    gens = [vec((1, 2)), vec((0, 1))]
    out = conic_membership(vec((1, 2)), gens)
    assert out.member


def test_conic_zero_target():
    out = conic_membership(vec((0, 0, 0)), [vec((1, 1, 0)), vec((1, -1, 0))])
    assert out.member
    assert all(w == 0 for w in out.weights)


def test_conic_unique_midpoint_weights():
    out = conic_membership(vec((1, 0, 0)), [vec((1, 1, 0)), vec((1, -1, 0))])
    assert out.member
    assert out.weights == (Fraction(1, 2), Fraction(1, 2))


def test_conic_separation():
    rays = [vec(r) for r in ((1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1))]
    out = conic_membership(vec((0, 0, 1)), rays)
    assert not out.member
    h = out.separating
    assert dot(h, (0, 0, 1)) < 0
    for r in rays:
        assert dot(h, r) >= 0


def test_conic_empty_generator_list():
    assert conic_membership(vec((0, 0)), []).member
    out = conic_membership(vec((1, 0)), [])
    assert not out.member
    assert dot(out.separating, (1, 0)) < 0


def test_determinism():
    p = LpProblem.build(
        3,
        ge_rows=[((1, 2, -1), 1), ((0, 1, 1), 2), ((-1, 0, 3), 0)],
        nonneg=(0, 1, 2),
        objective=(2, 1, 1),
    )
    assert solve(p) == solve(p)


def test_random_conic_round_trip():
    """Targets built as known nonnegative combinations must come back member,
    and whatever certificate is returned must re-verify against the data."""
    rng = random.Random(97)
    for _ in range(40):
        dim = rng.randint(2, 5)
        gens = [vec([rng.randint(-4, 4) for _ in range(dim)])
                for _ in range(rng.randint(1, 6))]
        weights = [Fraction(rng.randint(0, 5), rng.randint(1, 3)) for _ in gens]
        target = [Fraction(0)] * dim
        for w, g in zip(weights, gens):
            target = [t + w * c for t, c in zip(target, g)]
        out = conic_membership(vec(target), gens)
        assert out.member
        rebuilt = [Fraction(0)] * dim
        for w, g in zip(out.weights, gens):
            assert w >= 0
            rebuilt = [t + w * c for t, c in zip(rebuilt, g)]
        assert tuple(rebuilt) == tuple(target)


def test_random_queries_always_carry_valid_certificates():
    rng = random.Random(101)
    member = nonmember = 0
    for _ in range(60):
        dim = rng.randint(2, 4)
        gens = [vec([rng.randint(-3, 3) for _ in range(dim)])
                for _ in range(rng.randint(1, 5))]
        target = vec([rng.randint(-6, 6) for _ in range(dim)])
        out = conic_membership(target, gens)
        if out.member:
            member += 1
            rebuilt = [Fraction(0)] * dim
            for w, g in zip(out.weights, gens):
                assert w >= 0
                rebuilt = [t + w * c for t, c in zip(rebuilt, g)]
            assert tuple(rebuilt) == tuple(target)
        else:
            nonmember += 1
            h = out.separating
            assert dot(h, target) < 0
            for g in gens:
                assert dot(h, g) >= 0
    assert member > 0 and nonmember > 0


def test_random_lps_self_verify():
    rng = random.Random(103)
    statuses = set()
    for _ in range(60):
        nv = rng.randint(1, 4)
        p = LpProblem.build(
            nv,
            eq_rows=[(tuple(rng.randint(-3, 3) for _ in range(nv)), rng.randint(-3, 3))
                     for _ in range(rng.randint(0, 2))],
            ge_rows=[(tuple(rng.randint(-3, 3) for _ in range(nv)), rng.randint(-3, 3))
                     for _ in range(rng.randint(0, 3))],
            nonneg=tuple(j for j in range(nv) if rng.random() < 0.7),
            objective=tuple(rng.randint(-2, 2) for _ in range(nv)),
        )
        out = solve(p)
        statuses.add(out.status)
        if out.status == FEASIBLE:
            verify_point(p, out.point)
        elif out.status == INFEASIBLE:
            verify_farkas(p, out.certificate)
        else:
            verify_ray(p, out.point, out.ray)
    assert statuses == {FEASIBLE, INFEASIBLE, UNBOUNDED}
