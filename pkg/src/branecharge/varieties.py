"""Named smooth Fano toric varieties, as reflexive polytopes in M.

The variety of a polytope is that of its normal fan, so ``P^n`` comes from the
*dual* of the simplex ``conv(e_1, ..., e_n, -sum e_i)``: the simplex itself is
the polytope spanned by the rays.
"""

from functools import reduce

from .fan import normal_fan
from .polytope import LatticePolytope, product_polytope

__all__ = [
    "from_rays", "projective_space", "product", "hexagon", "SURFACES",
    "THREEFOLDS", "FOURFOLDS", "fixture_fans",
]


def from_rays(rays):
    """Reflexive polytope whose normal fan has the given rays.

    ``conv(rays)`` must be reflexive, which holds for every smooth Fano fan.
    """
    return LatticePolytope(rays).dual()


def projective_space(n):
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return from_rays(basis + [(-1,) * n])


def product(*polys):
    return reduce(product_polytope, polys)


def hexagon():
    """del Pezzo surface of degree 6 (P^2 blown up in three points)."""
    return from_rays([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])


P1 = LatticePolytope([(-1,), (1,)])

# the five smooth toric del Pezzo surfaces
SURFACES = {
    "P2": lambda: projective_space(2),
    "P1xP1": lambda: product(P1, P1),
    "F1": lambda: from_rays([(1, 0), (1, 1), (0, 1), (-1, -1)]),
    "Bl2P2": lambda: from_rays([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1)]),
    "dP6": hexagon,
}

THREEFOLDS = {
    "P3": lambda: projective_space(3),
    "P1xP1xP1": lambda: product(P1, P1, P1),
    "P1xP2": lambda: product(P1, projective_space(2)),
}

FOURFOLDS = {
    "P4": lambda: projective_space(4),
    "P1xP3": lambda: product(P1, projective_space(3)),
    "P2xP2": lambda: product(projective_space(2), projective_space(2)),
    "P1xP1xP2": lambda: product(P1, P1, projective_space(2)),
}


def fixture_fans(table):
    return {name: normal_fan(make()) for name, make in table.items()}
