"""Intersection numbers, Chern classes and Todd classes.

Classes live in the Chow ring, written in the basis of orbit closures V(sigma).
Products of divisors reduce to that basis by the usual toric rules, and
`degree` reads off the number attached to the top-codimension part.
"""

from branecharge import (DivisorClass, GradedClass, chern_total, degree,
                         equivalent, normal_fan, pairings, todd_class)
from branecharge.intersection import multiply
from branecharge.varieties import SURFACES, fixture_fans, projective_space


def show(values):
    return ", ".join(str(v) for v in values)


p3 = normal_fan(projective_space(3))
H = DivisorClass.prime(0)
X = GradedClass.fundamental(3)

# H^3 = 1 on P^3; (-K)^3 = 64.
print("H^3 on P^3:", degree(multiply(p3, H, multiply(p3, H, multiply(p3, H, X)))))
minus_K = DivisorClass.anticanonical(p3)
print("(-K)^3 on P^3:", degree(multiply(p3, minus_K, multiply(p3, minus_K,
                                                               multiply(p3, minus_K, X)))))

# Classes are compared through pairings, never by raw coefficients: the
# same class has many representatives in the cone basis.
print("c(P^3) paired with powers of H:", show(pairings(p3, chern_total(p3), H)))
print("td(P^3) paired with powers of H:", show(pairings(p3, todd_class(p3), H)))

# A principal divisor is zero in the ring.
P = DivisorClass.principal(p3, (1, -2, 3))
print("div(chi^m) . H is zero:", equivalent(p3, multiply(p3, P, multiply(p3, H, X)),
                                           GradedClass(3)))

# Noether's formula on the toric del Pezzo surfaces: K^2 = 12 - #rays.
for name, f in fixture_fans(SURFACES).items():
    K = DivisorClass.canonical(f)
    K2 = degree(multiply(f, K, multiply(f, K, GradedClass.fundamental(2))))
    print(f"  {name:6s} K^2 = {K2}  (12 - {len(f.rays)} rays)")
