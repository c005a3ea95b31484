"""Arithmetic genera of line bundles on Calabi-Yau threefolds.

For a smooth Fano fourfold X, a generic anticanonical hypersurface Y is a
Calabi-Yau threefold.  `chi_cy3` computes chi(Y, O(D)|Y) by intersection
theory on X; `chi_hypersurface` counts lattice points instead.  Both should
agree whenever D is nef.
"""

from branecharge import chi_L_cy3, chi_cy3, chi_hypersurface, normal_fan
from branecharge.intersection import DivisorClass
from branecharge.varieties import FOURFOLDS, fixture_fans, projective_space

p4 = normal_fan(projective_space(4))
print("The quintic threefold, chi(Y, O(dH)):")
for d in (0, 1, 2, 3, 5):
    D = DivisorClass({0: d})
    print(f"  d={d}: formula {chi_cy3(p4, D)}, lattice points {chi_hypersurface(p4, D)}")

# chi_L is the genus of the bundle -3K restricted to Y.  On P^4 it is
# 2875, which also counts the lines on a generic quintic.
print("chi_L on each fourfold:")
for name, f in fixture_fans(FOURFOLDS).items():
    K = DivisorClass.canonical(f)
    print(f"  {name:9s} {chi_L_cy3(f)}  (oracle {chi_hypersurface(f, K * -3)})")
