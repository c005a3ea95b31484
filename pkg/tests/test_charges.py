from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from branecharge.charges import (charge_L_dim3, charge_dim3, charge_general,
                                 charge_surface, chi_L_cy3, chi_cy3, verify_grr)
from branecharge.errors import DimensionMismatch, DimensionUnsupported, NotReflexive, NotSmooth
from branecharge.fan import Fan, normal_fan
from branecharge.intersection import (DivisorClass, GradedClass, degree,
                                      equivalent, is_nef, multiply, pairings)
from branecharge.oracle import chi_hypersurface
from branecharge.polytope import LatticePolytope
from branecharge.varieties import projective_space


def anticanonical_class(f):
    return multiply(f, DivisorClass.anticanonical(f), GradedClass.fundamental(f.dim))


def point(f, k=1):
    return GradedClass(f.dim, {f.max_cones[0]: k})


def H(f):
    return DivisorClass.prime(0)


def test_general_p3(p3):
    assert pairings(p3, charge_general(p3, DivisorClass()), H(p3))[1:] == [4, 16, 34]


def test_general_p2(p2):
    Q = charge_general(p2, DivisorClass())
    assert equivalent(p2, Q, anticanonical_class(p2) + point(p2, 9))


def test_general_codim1_independent_of_divisor(p3):
    Q = charge_general(p3, DivisorClass([1, 0, 0, 0]))
    assert pairings(p3, Q, H(p3))[1] == 4
    assert equivalent(p3, Q.component(1), anticanonical_class(p3))


@pytest.mark.parametrize("d, expected", [(0, 0), (1, 5), (5, 125)])
def test_chi_cy3_p4(p4, d, expected):
    assert chi_cy3(p4, DivisorClass({0: d})) == expected


def test_chi_l_cy3(fourfolds):
    assert chi_L_cy3(fourfolds["P4"]) == 2875
    for f in fourfolds.values():
        K = DivisorClass.canonical(f)
        assert chi_L_cy3(f) == chi_cy3(f, K * -3) == chi_hypersurface(f, K * -3)


def test_charge_dim3_p3(p3):
    assert pairings(p3, charge_dim3(p3, DivisorClass()), H(p3))[1:] == [4, 16, 34]
    assert pairings(p3, charge_dim3(p3, DivisorClass({0: 8})), H(p3))[1:] == [4, 48, 290]


def test_charge_l_dim3(threefolds):
    p3 = threefolds["P3"]
    assert pairings(p3, charge_L_dim3(p3), H(p3))[1:] == [4, 48, 290]
    for f in threefolds.values():
        K = DivisorClass.canonical(f)
        L = charge_L_dim3(f)
        assert equivalent(f, L, charge_dim3(f, K * -2))
        assert equivalent(f, L.component(1), anticanonical_class(f))


def test_charge_dim3_matches_general_cube(threefolds):
    f = threefolds["P1xP1xP1"]
    assert equivalent(f, charge_dim3(f, DivisorClass()), charge_general(f, DivisorClass()))


def test_charge_surface(p1p1, p2):
    assert equivalent(p1p1, charge_surface(p1p1, DivisorClass()),
                      anticanonical_class(p1p1) + point(p1p1, 8))
    assert equivalent(p2, charge_surface(p2, DivisorClass()),
                      anticanonical_class(p2) + point(p2, 9))
    # K.(K - D) = K^2 - K.D = 9 + 3; F = O_Y(4H) on a plane cubic has chi = 12
    Q = charge_surface(p2, DivisorClass({0: 1}))
    assert equivalent(p2, Q, anticanonical_class(p2) + point(p2, 12))
    assert degree(Q) == chi_hypersurface(p2, DivisorClass({0: 4})) == 12


def test_dimension_gates(p2, p3, p4):
    with pytest.raises(DimensionMismatch):
        chi_cy3(p3, DivisorClass())
    with pytest.raises(DimensionMismatch):
        charge_dim3(p4, DivisorClass())
    with pytest.raises(DimensionMismatch):
        charge_surface(p3, DivisorClass())
    with pytest.raises(DimensionMismatch):
        charge_L_dim3(p2)


def test_rejects_singular():
    f = normal_fan(LatticePolytope([(1, 0), (0, 1), (-1, -1)]))
    with pytest.raises(NotSmooth):
        charge_general(f, DivisorClass())


def test_rejects_non_fano():
    # Hirzebruch surface F_2: smooth and complete but -K is only nef
    rays = [(1, 0), (0, 1), (-1, 2), (0, -1)]
    f = Fan.from_maximal_cones(rays, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert f.smooth and f.complete
    with pytest.raises(NotReflexive):
        charge_surface(f, DivisorClass())
    # twice the square: the fan is P1 x P1 but the polytope has offsets 2
    big = normal_fan(LatticePolytope([(2, 2), (2, -2), (-2, 2), (-2, -2)]))
    with pytest.raises(NotReflexive):
        charge_general(big, DivisorClass())


def test_rejects_high_dimension():
    f = normal_fan(projective_space(5))
    with pytest.raises(DimensionUnsupported):
        charge_general(f, DivisorClass())


def test_verify_grr_p3(p3):
    rep = verify_grr(p3, DivisorClass())
    assert rep.passed and not rep.skipped
    oracle_check = [c for c in rep.checks if "oracle" in c.name]
    assert oracle_check[0].expected == 34 and oracle_check[0].got == 34


def test_verify_grr_p4(p4):
    # F = i^*(O(D) (x) N) with D = H - (-K) = -4H restricts O(H)
    rep = verify_grr(p4, DivisorClass({0: -4}))
    assert rep.passed and rep.genus == 5


def test_verify_grr_skips_oracle(p2):
    rep = verify_grr(p2, DivisorClass({0: -5}))
    assert rep.passed
    assert rep.skipped and not any("oracle" in c.name for c in rep.checks)
    assert len(rep.checks) == 3


small = st.integers(-3, 3)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_closed_forms_match_general(surfaces, threefolds, data):
    fans = {**surfaces, **threefolds}
    f = fans[data.draw(st.sampled_from(sorted(fans)))]
    D = DivisorClass(data.draw(st.lists(small, min_size=len(f.rays), max_size=len(f.rays))))
    special = charge_surface(f, D) if f.dim == 2 else charge_dim3(f, D)
    Q = charge_general(f, D)
    assert equivalent(f, special, Q)
    assert equivalent(f, Q.component(1), anticanonical_class(f))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_charge_degree_matches_oracle(all_fans, data):
    f = all_fans[data.draw(st.sampled_from(sorted(all_fans)))]
    r = len(f.rays)
    D = DivisorClass(data.draw(st.lists(st.integers(-1, 2), min_size=r, max_size=r)))
    E = D + DivisorClass.anticanonical(f)
    if is_nef(f, E):
        assert degree(charge_general(f, D)) == chi_hypersurface(f, E)
    if f.dim == 4 and is_nef(f, D):
        assert chi_cy3(f, D) == chi_hypersurface(f, D)
