"""Slot bookkeeping: permutation action, symmetric projection, contractions."""

import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from coneext.linalg import rank
from coneext.tensors import (DUAL, PRIMAL, DenseTensor, Slot, basis_vector,
                             contract_slot, from_vector, kron, pairing,
                             permute_slots, sym_basis, symmetric_project,
                             zero_tensor)


def _random_tensor(rng, k, dim, variance=PRIMAL, span=5):
    slots = tuple(Slot(dim, variance) for _ in range(k))
    size = dim ** k
    entries = [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(size)]
    return DenseTensor(slots, entries)


def _compose(sigma, tau):
    # apply tau first, then sigma
    return tuple(sigma[tau[i]] for i in range(len(sigma)))


def test_identity_permutation_fixes_everything():
    rng = random.Random(2)
    t = _random_tensor(rng, 3, 2)
    assert permute_slots(t, (0, 1, 2)) == t


def test_transposition_on_pure_tensor():
    e1 = basis_vector(2, 0)
    e2 = basis_vector(2, 1)
    swapped = permute_slots(kron(e1, e2), (1, 0))
    assert swapped == kron(e2, e1)


def test_permutation_action_composes():
    rng = random.Random(41)
    for _ in range(40):
        k = rng.choice((3, 4))
        t = _random_tensor(rng, k, 2)
        sigma = tuple(rng.sample(range(k), k))
        tau = tuple(rng.sample(range(k), k))
        lhs = permute_slots(permute_slots(t, tau), sigma)
        assert lhs == permute_slots(t, _compose(sigma, tau))


def test_permutation_needs_matching_slots():
    t = kron(basis_vector(2, 0), basis_vector(3, 0))
    with pytest.raises(ValueError):
        permute_slots(t, (1, 0))


def test_symmetric_tensors_are_permutation_fixed():
    rng = random.Random(43)
    for _ in range(20):
        k = rng.choice((2, 3))
        s = symmetric_project(_random_tensor(rng, k, 3))
        for sigma in itertools.permutations(range(k)):
            assert permute_slots(s, sigma) == s


def test_projection_idempotent_up_to_k4():
    rng = random.Random(47)
    for k in (1, 2, 3, 4):
        t = _random_tensor(rng, k, 2)
        p = symmetric_project(t)
        assert symmetric_project(p) == p


def test_projection_two_element_average():
    e1 = basis_vector(2, 0)
    e2 = basis_vector(2, 1)
    p = symmetric_project(kron(e1, e2))
    expected = (kron(e1, e2) + kron(e2, e1)).scale(Fraction(1, 2))
    assert p == expected


def test_projection_self_adjoint():
    rng = random.Random(53)
    for _ in range(30):
        k = rng.choice((2, 3))
        s = _random_tensor(rng, k, 2, DUAL)
        t = _random_tensor(rng, k, 2, PRIMAL)
        assert pairing(symmetric_project(s), t) == pairing(s, symmetric_project(t))


def test_kron_entry_layout():
    a = from_vector((1, 1, 0))
    b = from_vector((1, 0, 1))
    t = kron(a, b)
    ones = {(0, 0), (0, 2), (1, 0), (1, 2)}
    for idx in t.multi_indices():
        assert t[idx] == (1 if idx in ones else 0)


def test_kron_with_scalar_is_identity():
    one = DenseTensor((), (Fraction(1),))
    rng = random.Random(59)
    t = _random_tensor(rng, 2, 3)
    assert kron(one, t) == t
    assert kron(t, one) == t


def test_dual_pair_kron_oracle():
    rng = random.Random(61)
    for _ in range(50):
        f = _random_tensor(rng, 1, 3, DUAL)
        g = _random_tensor(rng, 1, 3, DUAL)
        x = _random_tensor(rng, 1, 3)
        y = _random_tensor(rng, 1, 3)
        assert pairing(kron(f, g), kron(x, y)) == pairing(f, x) * pairing(g, y)


def test_contract_single_slot():
    phi = from_vector((1, 0, 0), DUAL)
    x = from_vector((1, 1, 0))
    out = contract_slot(x, 0, phi)
    assert out.slots == ()
    assert out.entries == (Fraction(1),)


def test_contract_power_with_normalizing_form():
    phi = from_vector((1, 0, 0), DUAL)
    x = from_vector((1, -2, 3))
    t = kron(x, x, x)
    for _ in range(3):
        t = contract_slot(t, 0, phi)
    assert t.entries == (Fraction(1),)


def test_contract_is_termwise():
    rng = random.Random(67)
    phi = from_vector(tuple(rng.randint(-3, 3) for _ in range(3)), DUAL)
    pairs = [(_random_tensor(rng, 1, 2), _random_tensor(rng, 1, 3)) for _ in range(4)]
    total = None
    for a, b in pairs:
        t = kron(a, b)
        total = t if total is None else total + t
    contracted = contract_slot(total, 1, phi)
    expected = None
    for a, b in pairs:
        t = a.scale(pairing(phi, b))
        expected = t if expected is None else expected + t
    assert contracted == expected


def test_contract_variance_mismatch():
    x = from_vector((1, 0))
    with pytest.raises(ValueError):
        contract_slot(kron(x, x), 0, from_vector((1, 0)))


def test_sym_basis_count_and_rank():
    for n, k in ((2, 2), (3, 2), (2, 3), (3, 3), (4, 2)):
        basis = sym_basis(n, k)
        assert len(basis) == comb(n + k - 1, k)
        rows = [t.entries for t in basis]
        assert rank(rows) == len(basis)
        for t in basis:
            assert symmetric_project(t) == t


def test_sym_basis_n2_k2_explicit():
    entries = {t.entries for t in sym_basis(2, 2)}
    h = Fraction(1, 2)
    assert entries == {
        (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(0), h, h, Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    }


def test_pairing_is_flat_dot():
    rng = random.Random(71)
    s = _random_tensor(rng, 2, 3, DUAL)
    t = _random_tensor(rng, 2, 3)
    assert pairing(s, t) == sum(a * b for a, b in zip(s.entries, t.entries))


def test_zero_tensor_and_entry_count_check():
    z = zero_tensor((Slot(2, PRIMAL), Slot(3, PRIMAL)))
    assert all(e == 0 for e in z.entries)
    with pytest.raises(ValueError):
        DenseTensor((Slot(2, PRIMAL),), (1, 2, 3))
