"""Brane charges of sheaves pushed forward from the hypersurface.

For a line bundle O(D) on X, the sheaf F = i*(O(D) (x) N) lives on the
anticanonical hypersurface Y, where N = O(-K)|Y is its normal bundle.  Its
charge is the class td(X) ch(D) (e^{-K} - 1).  The codimension-1 part is
always [Y] = -K, and by Riemann-Roch the degree is chi(Y, F).
"""

from branecharge import (charge_L_dim3, charge_dim3, charge_general,
                         charge_surface, degree, equivalent, normal_fan,
                         pairings, verify_grr)
from branecharge.intersection import DivisorClass
from branecharge.varieties import SURFACES, fixture_fans, projective_space


def show(values):
    return ", ".join(str(v) for v in values)


p3 = normal_fan(projective_space(3))
H = DivisorClass.prime(0)

# On P^3 the hypersurface is a quartic K3 surface.  Pairing against H^2,
# H and 1 gives the degree of Y, a curve count and chi(Y, F).
print("P^3, D = 0:   ", show(pairings(p3, charge_dim3(p3, DivisorClass()), H)[1:]))
print("P^3, D = -2K: ", show(pairings(p3, charge_L_dim3(p3), H)[1:]))

Q = charge_general(p3, H)
print("general formula agrees with the closed form:",
      equivalent(p3, Q, charge_dim3(p3, H)))

# On surfaces Y is an elliptic curve, and the charge is -K plus a point class.
for name, f in fixture_fans(SURFACES).items():
    print(f"  {name:6s} charge(D=0) has point degree {degree(charge_surface(f, DivisorClass()))}")

p2 = normal_fan(projective_space(2))
# On P^2 with D = H the sheaf is O_Y(4H) on a plane cubic: degree 12.
print("P^2, D = H:", degree(charge_surface(p2, H)))

# verify_grr runs every available cross-check for one divisor, including
# the lattice-point count when D - K is nef.
report = verify_grr(p3, H)
for check in report.checks:
    print(f"  {'ok ' if check.passed else 'BAD'} {check.name}: {check.got}")
