"""Euler characteristics from lattice-point counts.

These values are computed without any intersection theory and serve as the
independent check on the charge formulas.  For a nef divisor ``D`` on a smooth
complete toric variety, higher cohomology of ``O(D)`` vanishes, so
``chi(X, O(D)) = #(P_D cap M)``, and ``O(-D)`` only has cohomology in degree
``dim P_D``, of dimension ``#(relint P_D cap M)``.  With Serre duality and the
restriction sequence ``0 -> O(D+K) -> O(D) -> O_Y(D) -> 0`` this gives

    chi(Y, O(D)|_Y) = #(P_D cap M) - (-1)^(n - dim P_D) #(relint P_D cap M).

For full-dimensional ``P_D`` this is the boundary point count.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotComplete, NotNef, NotReflexive
from .fan import require_smooth_complete
from .intersection import DivisorClass, is_ample, is_nef
from .linalg import dot, rank
from .polytope import lattice_points

__all__ = [
    "OracleResult", "section_polytope", "chi_toric_nef", "chi_hypersurface",
    "euler_characteristic_top", "oracle",
]


@dataclass(frozen=True)
class OracleResult:
    divisor: tuple
    nef: bool
    chi_X: int
    chi_Y: int
    counts: tuple  # (lattice points, relative-interior lattice points)
    section_dim: int


def section_polytope(fan, D):
    """Lattice points of ``P_D = {m : <m, u_rho> >= -a_rho}``.

    Returns ``(points, relative_interior_points, dim P_D)``.
    """
    halfspaces = [(u, D.coeffs.get(i, Fraction(0))) for i, u in enumerate(fan.rays)]
    points, _ = lattice_points(halfspaces)
    if not points:
        return [], [], -1
    implicit = [i for i, (u, a) in enumerate(halfspaces)
                if all(dot(p, u) == -a for p in points)]
    dim = fan.dim - rank([fan.rays[i] for i in implicit]) if implicit else fan.dim
    relint = [p for p in points
              if all(dot(p, u) > -a for i, (u, a) in enumerate(halfspaces)
                     if i not in implicit)]
    return points, relint, dim


def _require_nef(fan, D):
    if not is_nef(fan, D):
        raise NotNef(f"divisor {D!r} is not nef; lattice-point counts would "
                     "miss higher cohomology")


def chi_toric_nef(fan, D):
    """``chi(X, O(D))`` for nef ``D``: the number of lattice points of ``P_D``."""
    require_smooth_complete(fan)
    _require_nef(fan, D)
    return len(section_polytope(fan, D)[0])


def _require_fano(fan):
    if not is_ample(fan, DivisorClass.anticanonical(fan)):
        raise NotReflexive("-K_X is not ample, so the fan does not come from a "
                           "reflexive polytope")


def chi_hypersurface(fan, D):
    """``chi(Y, O(D)|_Y)`` on an anticanonical hypersurface, for nef ``D``."""
    require_smooth_complete(fan)
    _require_fano(fan)
    _require_nef(fan, D)
    points, relint, dim = section_polytope(fan, D)
    return len(points) - (-1) ** (fan.dim - dim) * len(relint)


def euler_characteristic_top(fan):
    """Topological Euler characteristic: the number of maximal cones."""
    if not fan.complete:
        raise NotComplete("Euler characteristic needs a complete fan")
    return len(fan.max_cones)


def oracle(fan, D):
    """All lattice-point data for ``D`` at once; counts are None unless nef."""
    require_smooth_complete(fan)
    _require_fano(fan)
    vec = D.vector(len(fan.rays))
    if not is_nef(fan, D):
        return OracleResult(vec, False, None, None, None, None)
    points, relint, dim = section_polytope(fan, D)
    chi_y = len(points) - (-1) ** (fan.dim - dim) * len(relint)
    return OracleResult(vec, True, len(points), chi_y, (len(points), len(relint)), dim)
