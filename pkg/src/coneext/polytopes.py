"""Polytope vertex/facet combinatorics: incidence, simplicity, two-levelness,
the affine-hull commutation test, and recognition of products of simplices.

A polytope may sit in a lower-dimensional affine subspace of its ambient
space; it carries an explicit hull description (point plus direction basis).
Facet functionals are affine, nonnegative on the polytope and zero exactly
on their facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import make_cone
from .linalg import (affine_rank, dot, greedy_independent, inverse, nullspace,
                     primitive, solve, transpose, vec, vec_sub)

FACET_CAP = 20  # subset iteration guard for the commutation test


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    vertices: tuple          # canonical sorted points
    functionals: tuple       # rows (a0, a1..aN): psi(x) = a0 + a . x, primitive
    hull_point: tuple
    hull_directions: tuple   # basis of the hull's direction space
    incidence: tuple         # per vertex: frozenset of facet indices with psi == 0

    @property
    def dim(self):
        return len(self.hull_directions)

    def evaluate(self, facet_index, point):
        f = self.functionals[facet_index]
        return f[0] + dot(f[1:], point)

    def avoiding_set(self, vertex_index):
        """Facets NOT containing the given vertex."""
        return frozenset(range(len(self.functionals))) - self.incidence[vertex_index]

    def vertices_of_facet(self, facet_index):
        return tuple(i for i, inc in enumerate(self.incidence) if facet_index in inc)

    def face_from_facets(self, facet_indices):
        s = frozenset(facet_indices)
        return tuple(i for i, inc in enumerate(self.incidence) if s <= inc)


def _check_polytope(p):
    for j in range(len(p.functionals)):
        for i, v in enumerate(p.vertices):
            val = p.evaluate(j, v)
            if val < 0:
                raise AssertionError("facet functional negative on a vertex")
            if (val == 0) != (j in p.incidence[i]):
                raise AssertionError("incidence does not match functional zeros")
    d = p.dim
    if len(p.vertices) > 1 and affine_rank(p.vertices) != d:
        raise AssertionError("vertex set does not span the recorded hull")
    for j in range(len(p.functionals)):
        verts = [p.vertices[i] for i in p.vertices_of_facet(j)]
        if not verts or affine_rank(verts) != d - 1:
            raise AssertionError("facet is not a codimension-1 face")


def polytope_from_vertices(points):
    """Build a polytope from points (non-vertices are dropped).

    Facets come from the homogenization cone over hull-local coordinates,
    so the construction is exact in any ambient dimension.
    """
    pts = sorted({vec(p) for p in points})
    if not pts:
        raise ValueError("no points given")
    ambient = len(pts[0])
    if any(len(p) != ambient for p in pts):
        raise ValueError("mixed ambient dimensions")
    v0 = pts[0]
    diffs = [vec_sub(p, v0) for p in pts]
    dir_idx = greedy_independent(diffs)
    directions = [diffs[i] for i in dir_idx]
    d = len(directions)
    if d == 0:
        p = Polytope(ambient, (pts[0],), (), pts[0], (), (frozenset(),))
        return p
    # local coordinates t(x) = L (x - v0) with L the left inverse of D
    dmat = transpose(directions)           # ambient x d, columns are directions
    gram = [[dot(a, b) for b in directions] for a in directions]
    left = [vec(r) for r in inverse(gram)]
    lmap = [tuple(sum(left[i][j] * directions[j][c] for j in range(d))
                  for c in range(ambient)) for i in range(d)]

    def local(x):
        diff = vec_sub(x, v0)
        return tuple(dot(row, diff) for row in lmap)

    cone = make_cone([(Fraction(1),) + local(p) for p in pts])
    kept = []
    for p in pts:
        ray = primitive((Fraction(1),) + local(p))
        if ray in cone.rays:
            kept.append(p)
    vertices = tuple(sorted(kept))
    functionals = []
    for f in cone.facets:
        a0, alocal = f[0], f[1:]
        coeffs = tuple(sum(alocal[i] * lmap[i][c] for i in range(d))
                       for c in range(ambient))
        const = a0 - dot(coeffs, v0)
        functionals.append(primitive((const,) + coeffs))
    functionals = tuple(sorted(functionals))
    incidence = []
    for v in vertices:
        inc = frozenset(j for j, f in enumerate(functionals)
                        if f[0] + dot(f[1:], v) == 0)
        incidence.append(inc)
    p = Polytope(ambient, vertices, functionals, v0, tuple(directions),
                 tuple(incidence))
    _check_polytope(p)
    return p


def base_polytope(cone, phi):
    """The slice {x in C : phi(x) = 1}; functionals are the cone facets and
    stay in bijection with them (same order)."""
    phi = vec(phi)
    vertices = tuple(sorted(tuple(x / dot(phi, r) for x in r) for r in cone.rays))
    functionals = tuple((Fraction(0),) + f for f in cone.facets)
    directions = tuple(nullspace([phi]))
    incidence = tuple(frozenset(j for j, f in enumerate(cone.facets)
                                if dot(f, v) == 0) for v in vertices)
    p = Polytope(cone.dim, vertices, functionals, vertices[0], directions,
                 incidence)
    _check_polytope(p)
    return p


def is_simple(p):
    """Every vertex lies on exactly dim(P) facets."""
    return all(len(inc) == p.dim for inc in p.incidence)


def is_two_level(p):
    """Every facet functional takes a single nonzero value on vertices."""
    for j in range(len(p.functionals)):
        values = {p.evaluate(j, v) for v in p.vertices} - {Fraction(0)}
        if len(values) != 1:
            return False
    return True


def _facet_levels(p):
    levels = []
    for j in range(len(p.functionals)):
        values = {p.evaluate(j, v) for v in p.vertices} - {Fraction(0)}
        if len(values) != 1:
            return None
        levels.append(next(iter(values)))
    return levels


def _hull_system(p, facet_indices):
    """Rows/rhs of {t : psi_F(hull_point + directions t) = 0, F in S}."""
    rows = []
    rhs = []
    for j in facet_indices:
        f = p.functionals[j]
        coeffs = f[1:]
        rows.append(tuple(dot(coeffs, dvec) for dvec in p.hull_directions))
        rhs.append(-(f[0] + dot(coeffs, p.hull_point)))
    return rows, rhs


def affine_hull_commutes(p):
    """Whether aff(intersection of facets) equals intersection of facet hulls
    for every facet subset.  Returns (True, None) or (False, witness subset).

    Faces are intersections of facets, and once the identity holds for all
    facet subsets it transfers to arbitrary face families: writing each face
    as an intersection of facets, both sides of the general identity reduce
    to the same intersection of facet affine hulls.  Facet subsets therefore
    suffice, which keeps the iteration at 2^|facets| (guarded by FACET_CAP).
    """
    nf = len(p.functionals)
    if nf > FACET_CAP:
        raise ValueError(f"facet count {nf} exceeds the {FACET_CAP} subset-iteration cap")
    for size in range(1, nf + 1):
        for subset in itertools.combinations(range(nf), size):
            face = p.face_from_facets(subset)
            rows, rhs = _hull_system(p, subset)
            sol = solve(rows, rhs)
            if sol is None:
                hull_dim = None           # intersection of hulls is empty
            else:
                hull_dim = len(nullspace(rows, len(p.hull_directions)))
            if not face:
                if hull_dim is not None:
                    return False, frozenset(subset)
            else:
                face_dim = affine_rank([p.vertices[i] for i in face])
                if hull_dim is None or face_dim != hull_dim:
                    return False, frozenset(subset)
    return True, None


@dataclass(frozen=True)
class SimplexFactorization:
    """A combinatorial isomorphism with a product of simplices.

    ``facet_classes[i]`` lists the facets playing the role of factor i's
    vertices; a vertex's label is, per class, the unique facet of that class
    it avoids.  ``normalized[j]`` is the facet functional scaled to take
    value 1 on avoiding vertices, so the functionals of each class sum to
    the constant 1 over all vertices.
    """

    factor_dims: tuple
    facet_classes: tuple      # tuple of sorted facet-index tuples
    vertex_labels: tuple      # per vertex: tuple of positions within classes
    normalized: tuple         # per facet: functional scaled to level 1
    levels: tuple             # per facet: original nonzero value on vertices


@dataclass(frozen=True)
class FactorFailure:
    reason: str


def factor_as_simplices(p):
    """Recognize a product of simplices; failure is a value, never a raise.

    Requires simple and two-level; groups facets into classes where two
    facets are separated exactly when some vertex avoids both; verifies the
    grouping is an equivalence, labels vertices by avoided facets, and
    re-derives the incidence matrix from the labels before accepting.
    """
    if not is_simple(p):
        return FactorFailure("not simple: some vertex lies on more than dim facets")
    levels = _facet_levels(p)
    if levels is None:
        return FactorFailure("not two-level: a facet takes two nonzero vertex values")
    nf = len(p.functionals)
    nv = len(p.vertices)
    if nf == 0:
        return SimplexFactorization((), (), ((),) * nv, (), ())
    avoid = [p.avoiding_set(i) for i in range(nv)]
    separated = [[False] * nf for _ in range(nf)]
    for av in avoid:
        for fa, fb in itertools.combinations(sorted(av), 2):
            separated[fa][fb] = separated[fb][fa] = True
    together = lambda fa, fb: fa == fb or not separated[fa][fb]
    for fa, fb, fc in itertools.combinations(range(nf), 3):
        pairs = (together(fa, fb), together(fb, fc), together(fa, fc))
        if sum(pairs) == 2:
            return FactorFailure("facet grouping is not an equivalence relation")
    assigned = {}
    classes = []
    for f in range(nf):
        if f in assigned:
            continue
        members = tuple(g for g in range(nf) if together(f, g))
        for g in members:
            assigned[g] = len(classes)
        classes.append(members)
    labels = []
    for i in range(nv):
        label = []
        for members in classes:
            hits = [pos for pos, g in enumerate(members) if g in avoid[i]]
            if len(hits) != 1:
                return FactorFailure(
                    "a vertex does not avoid exactly one facet per class")
            label.append(hits[0])
        labels.append(tuple(label))
    expected = 1
    for members in classes:
        expected *= len(members)
    if len(set(labels)) != nv or expected != nv:
        return FactorFailure("vertex labels do not biject with the product")
    for i in range(nv):
        rebuilt = frozenset(
            g for ci, members in enumerate(classes)
            for pos, g in enumerate(members) if labels[i][ci] != pos)
        if rebuilt != p.incidence[i]:
            return FactorFailure("label-derived incidence mismatch")
    normalized = tuple(
        tuple(a / levels[j] for a in p.functionals[j]) for j in range(nf))
    for i in range(nv):
        for members in classes:
            total = sum((p.evaluate(j, p.vertices[i]) / levels[j]
                         for j in members), start=Fraction(0))
            if total != 1:
                return FactorFailure("class functionals do not sum to one")
    order = sorted(range(len(classes)), key=lambda c: (len(classes[c]), classes[c]))
    classes = tuple(classes[c] for c in order)
    labels = tuple(tuple(lab[c] for c in order) for lab in labels)
    dims = tuple(len(members) - 1 for members in classes)
    return SimplexFactorization(dims, classes, labels, normalized, tuple(levels))
