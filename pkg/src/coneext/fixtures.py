"""Built-in example cones and polytopes, as constructors and shipped files.

The construction functions build the corpus in-process; the shipped files
under ``coneext/fixtures/`` hold the same objects in the canonical text
formats, plus derived point files whose provenance is tools/make_fixtures.py
in the source tree.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .cones import make_based, make_cone
from .polytopes import polytope_from_vertices


def fixture_dir():
    return resources.files("coneext").joinpath("fixtures")


def fixture_path(filename):
    p = fixture_dir().joinpath(filename)
    if not p.is_file():
        raise FileNotFoundError(filename)
    return str(p)


def fixture_text(filename):
    return fixture_dir().joinpath(filename).read_text()


def list_fixtures():
    return sorted(p.name for p in fixture_dir().iterdir() if p.is_file())


# ---------------------------------------------------------------------------
# cones

def square_cone():
    return make_cone([(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)])


def square_based(skew=False):
    phi = (1, Fraction(1, 5), 0) if skew else (1, 0, 0)
    return make_based(square_cone(), phi)


def triangle_cone():
    return make_cone([(1, 1, 0), (1, -1, 1), (1, -1, -1)])


def orthant_cone(n):
    rays = [[0] * n for _ in range(n)]
    for i in range(n):
        rays[i][i] = 1
    return make_cone(rays)


def cube_cone():
    return make_cone([(1, x, y, z) for x in (-1, 1) for y in (-1, 1)
                      for z in (-1, 1)])


def prism_cone():
    return make_cone([(1, x, y, z) for (x, y) in ((0, 0), (1, 0), (0, 1))
                      for z in (0, 1)])


def pentagon_cone():
    return make_cone([(1,) + v for v in pentagon_vertices()])


def octahedron_cone():
    rays = []
    for i in range(3):
        for s in (-1, 1):
            r = [0, 0, 0]
            r[i] = s
            rays.append((1,) + tuple(r))
    return make_cone(rays)


def quad_cone():
    return make_cone([(1,) + v for v in quad_vertices()])


# ---------------------------------------------------------------------------
# polytopes

def pentagon_vertices():
    # strictly convex with rational coordinates; no edge is 2-level
    return ((0, 0), (2, 0), (3, 2), (1, 4), (-1, 2))


def quad_vertices():
    # convex quadrilateral that is not a parallelogram
    return ((0, 0), (2, 0), (3, 3), (0, 2))


def triangle_polytope():
    return polytope_from_vertices([(0, 0), (1, 0), (0, 1)])


def square_polytope():
    return polytope_from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])


def pentagon_polytope():
    return polytope_from_vertices(pentagon_vertices())


def quad_polytope():
    return polytope_from_vertices(quad_vertices())


def cube_polytope():
    return polytope_from_vertices([(x, y, z) for x in (0, 1) for y in (0, 1)
                                   for z in (0, 1)])


def prism_polytope():
    return polytope_from_vertices([(x, y, z) for (x, y) in ((0, 0), (1, 0), (0, 1))
                                   for z in (0, 1)])


def octahedron_polytope():
    verts = []
    for i in range(3):
        for s in (-1, 1):
            v = [0, 0, 0]
            v[i] = s
            verts.append(tuple(v))
    return polytope_from_vertices(verts)


POLYTOPE_BUILDERS = {
    "triangle": triangle_polytope,
    "square": square_polytope,
    "cube": cube_polytope,
    "prism": prism_polytope,
    "pentagon": pentagon_polytope,
    "quad": quad_polytope,
    "octahedron": octahedron_polytope,
}

# which polytopes factor into simplices (products of simplices)
FACTORABLE = ("triangle", "square", "cube", "prism")
UNFACTORABLE = ("pentagon", "quad", "octahedron")

CONE_BUILDERS = {
    "square": square_cone,
    "triangle": triangle_cone,
    "orthant2": lambda: orthant_cone(2),
    "orthant3": lambda: orthant_cone(3),
    "cube": cube_cone,
    "prism": prism_cone,
    "pentagon": pentagon_cone,
    "octahedron": octahedron_cone,
    "quad": quad_cone,
}

# strictly positive functionals used by the shipped based-cone files
CONE_PHIS = {
    "square": (1, 0, 0),
    "square-skew": (1, Fraction(1, 5), 0),
    "triangle": (1, 0, 0),
    "orthant2": (1, 1),
    "orthant3": (1, 1, 1),
    "cube": (1, 0, 0, 0),
    "prism": (1, 0, 0, 0),
    "pentagon": (1, 0, 0),
    "octahedron": (1, 0, 0, 0),
    "quad": (1, 0, 0),
}

# smallest k at which the reduction map breaks entanglement; None = never
EB_LEVELS = {
    "triangle": 1,
    "orthant2": 1,
    "orthant3": 1,
    "square": 2,
    "square-skew": None,
    "prism": 2,
    "cube": 3,
    "pentagon": None,
    "octahedron": None,
    "quad": None,
}


def based_cone(name):
    base_name = "square" if name == "square-skew" else name
    return make_based(CONE_BUILDERS[base_name](), CONE_PHIS[name])
