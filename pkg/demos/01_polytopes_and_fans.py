"""From a reflexive polytope to a smooth toric variety.

A lattice polytope in M determines a fan through its facet normals.  This
script builds a few polytopes, checks reflexivity and looks at the fans
they produce.  Run it from the repository root:

    python3 demos/01_polytopes_and_fans.py
"""

from branecharge import LatticePolytope, normal_fan
from branecharge.varieties import hexagon, projective_space

# The triangle spanned by (1,0), (0,1), (-1,-1) is reflexive, but its normal
# fan has cones of index 3: the variety is P^2 modulo Z/3, not P^2 itself.
triangle = LatticePolytope([(1, 0), (0, 1), (-1, -1)])
fan = normal_fan(triangle)
print("small triangle: reflexive =", triangle.is_reflexive(),
      "| smooth fan =", fan.smooth)

# Its polar dual is the big triangle with vertices (-1,-1), (2,-1), (-1,2).
# The normal fan of that one is the fan of P^2.
big = triangle.dual()
print("dual triangle vertices:", big.vertices)
print("its rays:", normal_fan(big).rays, "| smooth =", normal_fan(big).smooth)

# The library ships the usual fixtures.  projective_space(n) is already the
# dual simplex, so its fan is smooth.
for n in (2, 3, 4):
    p = projective_space(n)
    f = normal_fan(p)
    print(f"P^{n}: f-vector {p.f_vector}, {len(f.rays)} rays, "
          f"{len(f.max_cones)} maximal cones, smooth={f.smooth}, complete={f.complete}")

# The hexagon gives the degree-6 del Pezzo surface (P^2 blown up at three
# torus-fixed points).  Six rays, six maximal cones.
dp6 = normal_fan(hexagon())
print("dP6 rays:", dp6.rays)
for cone in dp6.max_cones:
    print("  maximal cone", sorted(cone))

# Lattice points: the anticanonical polytope of P^2 has 10 points, one inside.
points, interior = big.lattice_points()
print(f"P^2 polytope: {len(points)} lattice points, interior {interior}")
