"""Exact D-brane charges and arithmetic genera on Calabi-Yau hypersurfaces
of smooth Fano toric varieties."""

__version__ = "0.1.0"

from .polytope import LatticePolytope, compute_facets, dual_polytope, lattice_points
from .fan import Fan, normal_fan, is_smooth, is_complete
from .intersection import (DivisorClass, GradedClass, chern_character, chern_total,
                           c2_wall_sum, degree, equivalent, evaluate_polynomial,
                           pairings, todd_class)
from .charges import (charge_general, charge_dim3, charge_L_dim3, charge_surface,
                      chi_cy3, chi_L_cy3, verify_grr)
from .oracle import chi_hypersurface, chi_toric_nef, euler_characteristic_top
