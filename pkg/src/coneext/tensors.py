"""Dense tensors over finite-dimensional rational vector spaces.

A tensor carries an ordered list of slots, each a (dimension, variance)
pair; entries are stored flat in row-major order.  Contraction pairs a
primal slot against a dual slot of the same dimension.  Entries are
Fractions throughout the cone machinery; the container itself only needs
a field, so Q(sqrt2) scalars work too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

PRIMAL = "primal"
DUAL = "dual"


@dataclass(frozen=True)
class Slot:
    dim: int
    variance: str

    def __post_init__(self):
        if self.variance not in (PRIMAL, DUAL):
            raise ValueError(f"bad variance {self.variance!r}")
        if self.dim < 1:
            raise ValueError("slot dimension must be positive")

    @property
    def dual(self):
        return Slot(self.dim, DUAL if self.variance == PRIMAL else PRIMAL)


def _strides(slots):
    strides = [1] * len(slots)
    for i in range(len(slots) - 2, -1, -1):
        strides[i] = strides[i + 1] * slots[i + 1].dim
    return strides


class DenseTensor:
    __slots__ = ("slots", "entries", "_stride")

    def __init__(self, slots, entries):
        slots = tuple(slots)
        entries = tuple(entries)
        size = 1
        for s in slots:
            size *= s.dim
        if len(entries) != size:
            raise ValueError(f"expected {size} entries, got {len(entries)}")
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_stride", _strides(slots))

    def __setattr__(self, name, value):
        raise AttributeError("DenseTensor is immutable")

    # -- indexing -----------------------------------------------------------

    def flat_index(self, multi):
        if len(multi) != len(self.slots):
            raise ValueError("index arity mismatch")
        idx = 0
        for i, (j, s) in enumerate(zip(multi, self.slots)):
            if not 0 <= j < s.dim:
                raise IndexError(f"index {j} out of range for slot {i}")
            idx += j * self._stride[i]
        return idx

    def __getitem__(self, multi):
        if isinstance(multi, int):
            multi = (multi,)
        return self.entries[self.flat_index(multi)]

    def multi_indices(self):
        return itertools.product(*(range(s.dim) for s in self.slots))

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if self.slots != other.slots:
            raise ValueError("slot mismatch in tensor sum")
        return DenseTensor(self.slots, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if self.slots != other.slots:
            raise ValueError("slot mismatch in tensor difference")
        return DenseTensor(self.slots, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return DenseTensor(self.slots, tuple(-a for a in self.entries))

    def scale(self, c):
        return DenseTensor(self.slots, tuple(c * a for a in self.entries))

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self.slots == other.slots and self.entries == other.entries

    def __hash__(self):
        return hash((self.slots, self.entries))

    def is_zero(self):
        return all(a == 0 for a in self.entries)

    def __repr__(self):
        shape = ",".join(f"{s.dim}{'*' if s.variance == DUAL else ''}" for s in self.slots)
        return f"DenseTensor[{shape}]"


def zero_tensor(slots, zero=Fraction(0)):
    size = 1
    for s in slots:
        size *= s.dim
    return DenseTensor(slots, (zero,) * size)


def basis_vector(dim, i, variance=PRIMAL):
    entries = [Fraction(0)] * dim
    entries[i] = Fraction(1)
    return DenseTensor((Slot(dim, variance),), entries)


def from_vector(entries, variance=PRIMAL):
    entries = tuple(Fraction(e) for e in entries)
    return DenseTensor((Slot(len(entries), variance),), entries)


def kron(*tensors):
    """Tensor product; slots concatenate, entries multiply (row-major)."""
    if not tensors:
        raise ValueError("kron of nothing")
    result = tensors[0]
    for t in tensors[1:]:
        entries = tuple(a * b for a in result.entries for b in t.entries)
        result = DenseTensor(result.slots + t.slots, entries)
    return result


def reorder_slots(t, perm):
    """Raw slot reordering: output slot j is input slot perm[j]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(t.slots))):
        raise ValueError("not a permutation")
    slots = tuple(t.slots[p] for p in perm)
    out = zero_tensor(slots, zero=t.entries[0] * 0)
    entries = list(out.entries)
    stride = out._stride
    for multi in t.multi_indices():
        # entry at input index multi lands at output index with out[j] = multi[perm[j]]
        idx = 0
        for j, p in enumerate(perm):
            idx += multi[p] * stride[j]
        entries[idx] = t.entries[t.flat_index(multi)]
    return DenseTensor(slots, entries)


def permute_slots(t, sigma):
    """Symmetric-group action: slot j of the output holds the factor that was
    in slot sigma^-1(j).  All slots must share dimension and variance.

    On pure tensors this is x_1 ox ... ox x_k |-> x_{sigma^-1(1)} ox ... and on
    entries (U t)[i_1..i_k] = t[i_{sigma(1)}, .., i_{sigma(k)}].
    """
    k = len(t.slots)
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(k)):
        raise ValueError("not a permutation")
    if len({(s.dim, s.variance) for s in t.slots}) > 1:
        raise ValueError("permute_slots needs identical slots")
    inv = [0] * k
    for i, s in enumerate(sigma):
        inv[s] = i
    return reorder_slots(t, inv)


def symmetric_project(t, slot_indices=None):
    """Average of permute_slots over the symmetric group on the given slots
    (all slots by default).  Materialized directly; intended for k <= 8.
    """
    k = len(t.slots)
    if slot_indices is None:
        slot_indices = tuple(range(k))
    slot_indices = tuple(slot_indices)
    if len({(t.slots[i].dim, t.slots[i].variance) for i in slot_indices}) > 1:
        raise ValueError("symmetrized slots must be identical")
    if factorial(len(slot_indices)) > factorial(8):
        raise ValueError("symmetric_project materializes k! terms; k too large")
    total = None
    count = 0
    for perm in itertools.permutations(slot_indices):
        full = list(range(k))
        for pos, src in zip(slot_indices, perm):
            full[pos] = src
        term = reorder_slots(t, full)
        total = term if total is None else total + term
        count += 1
    return total.scale(Fraction(1, count))


def contract_slot(t, slot_index, f):
    """Contract slot ``slot_index`` of ``t`` against the 1-slot tensor ``f``
    of opposite variance and equal dimension."""
    if len(f.slots) != 1:
        raise ValueError("contraction partner must have exactly one slot")
    s = t.slots[slot_index]
    if f.slots[0] != s.dual:
        raise ValueError("contraction needs equal dimension and opposite variance")
    out_slots = t.slots[:slot_index] + t.slots[slot_index + 1:]
    entries = [None] * (len(t.entries) // s.dim)
    stride_out = _strides(out_slots)
    for multi in t.multi_indices():
        rest = multi[:slot_index] + multi[slot_index + 1:]
        idx = sum(j * st for j, st in zip(rest, stride_out))
        term = t.entries[t.flat_index(multi)] * f.entries[multi[slot_index]]
        entries[idx] = term if entries[idx] is None else entries[idx] + term
    return DenseTensor(out_slots, entries)


def pairing(s, t):
    """Full contraction of two tensors with elementwise dual slot lists."""
    if len(s.slots) != len(t.slots) or any(a != b.dual for a, b in zip(s.slots, t.slots)):
        raise ValueError("pairing needs elementwise dual slots")
    return sum((a * b for a, b in zip(s.entries, t.entries)), start=s.entries[0] * 0)


def sym_basis(n, k, variance=PRIMAL):
    """Basis of the symmetric subspace of the k-fold power of an n-dim space.

    One element per size-k multiset of [n]: the symmetrization of the
    corresponding monomial.  Each is fixed by symmetric_project, and there
    are C(n+k-1, k) of them.
    """
    out = []
    slots = tuple(Slot(n, variance) for _ in range(k))
    for multiset in itertools.combinations_with_replacement(range(n), k):
        arrangements = set(itertools.permutations(multiset))
        weight = Fraction(1, len(arrangements))
        entries = [Fraction(0)] * (n ** k)
        stride = _strides(slots)
        for arr in arrangements:
            idx = sum(j * st for j, st in zip(arr, stride))
            entries[idx] = weight
        out.append(DenseTensor(slots, entries))
    assert len(out) == comb(n + k - 1, k)
    return out
