from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from branecharge.errors import (DimensionMismatch, NotFullDimensional,
                                NotReflexive, Unbounded)
from branecharge.linalg import affine_rank, dot
from branecharge.polytope import (LatticePolytope, compute_facets, dual_polytope,
                                  face_lattice, is_reflexive, lattice_points)
from branecharge.varieties import projective_space

from conftest import simplex

SQUARE = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def hull_facet_count(points):
    """Number of distinct facet hyperplanes from qhull (floating point)."""
    hull = ConvexHull(np.array(points, dtype=float))
    eqs = {tuple(np.round(e / np.abs(e[:-1]).max(), 9)) for e in hull.equations}
    return len(eqs)


def test_square_facets():
    assert compute_facets(SQUARE) == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]


def test_four_simplex_facets():
    facets = compute_facets(simplex(4).vertices)
    assert len(facets) == 5
    assert all(k == 1 for _, k in facets)
    assert len(facets) == hull_facet_count(simplex(4).vertices)


def test_big_triangle_offsets():
    facets = compute_facets([(2, 0), (0, 2), (-2, -2)])
    assert [k for _, k in facets] == [2, 2, 2]
    # each edge hyperplane contains exactly two of the vertices
    for v, k in facets:
        on = [p for p in [(2, 0), (0, 2), (-2, -2)] if dot(p, v) == -k]
        assert len(on) == 2


def test_not_full_dimensional():
    with pytest.raises(NotFullDimensional):
        compute_facets([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(NotFullDimensional):
        LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_duplicates_and_non_vertices():
    p = LatticePolytope(SQUARE + [(1, 1), (0, 0), (1, 0)])
    assert sorted(p.vertices) == sorted(SQUARE)
    assert sorted(p.dropped) == [(0, 0), (1, 0)]


def test_ragged_input():
    with pytest.raises(DimensionMismatch):
        LatticePolytope([(0, 0), (1, 0, 0), (0, 1)])


def test_face_lattice_square():
    faces = face_lattice(LatticePolytope(SQUARE))
    assert [len(faces[0]), len(faces[1])] == [4, 4]


@pytest.mark.parametrize("n, expected", [(3, (4, 6, 4)), (4, (5, 10, 10, 5))])
def test_simplex_f_vector(n, expected):
    p = simplex(n)
    assert p.f_vector == expected
    assert len(p.faces[n - 2]) == comb(n + 1, 2)


def test_faces_record_containing_facets():
    p = simplex(4)
    for k, faces in p.faces.items():
        for f in faces:
            assert len(f.facets) == p.dim - k
            pts = [p.vertices[i] for i in f.vertices]
            assert affine_rank(pts) == k
            for j in f.facets:
                fa = p.facets[j]
                assert all(dot(v, fa.normal) == -fa.offset for v in pts)


def test_face_lattice_closed_under_intersection():
    p = projective_space(3)
    vsets = {f.vertices for faces in p.faces.values() for f in faces}
    for a in vsets:
        for b in vsets:
            if a & b:
                assert a & b in vsets


@pytest.mark.parametrize("points, expected", [
    (SQUARE, True),
    ([(2, 0), (0, 2), (-2, -2)], False),
    ([(1, 0), (0, 1), (-1, -1)], True),
])
def test_is_reflexive(points, expected):
    assert is_reflexive(LatticePolytope(points)) is expected


def test_dual_of_square_is_diamond():
    d = dual_polytope(LatticePolytope(SQUARE))
    assert set(d.vertices) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_dual_is_involution():
    p = LatticePolytope([(1, 0), (0, 1), (-1, -1)])
    assert set(p.dual().dual().vertices) == set(p.vertices)


def test_dual_of_four_simplex():
    d = simplex(4).dual()
    assert set(d.vertices) == set(simplex(4).normals)
    assert d.is_reflexive()
    assert set(d.dual().vertices) == set(simplex(4).vertices)


def test_dual_requires_reflexive():
    with pytest.raises(NotReflexive):
        dual_polytope(LatticePolytope([(2, 0), (0, 2), (-2, -2)]))


def std_simplex_halfspaces(n, t):
    hs = [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    return hs + [((-1,) * n, t)]


@pytest.mark.parametrize("t, total, interior", [(1, 5, 0), (5, 126, 1)])
def test_lattice_points_simplex(t, total, interior):
    pts, inner = lattice_points(std_simplex_halfspaces(4, t))
    assert (len(pts), len(inner)) == (total, interior)


def test_lattice_points_square():
    pts, inner = LatticePolytope(SQUARE).lattice_points()
    assert (len(pts), inner) == (9, [(0, 0)])


def test_lattice_points_rational_offsets():
    # 0 <= x, y and x + y <= 5/2
    hs = [((1, 0), 0), ((0, 1), 0), ((-1, -1), "5/2")]
    pts, inner = lattice_points(hs)
    assert len(pts) == 6 and inner == [(1, 1)]


def test_unbounded():
    with pytest.raises(Unbounded):
        lattice_points([((1, 0), 0), ((0, 1), 0)])
    with pytest.raises(Unbounded):
        lattice_points([((1, 0), 1), ((-1, 0), 1)])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("t", [0, 1, 2])
def test_simplex_point_counts(n, t):
    pts, _ = lattice_points(std_simplex_halfspaces(n, t))
    assert len(pts) == comb(n + t, n)


def test_reflexive_has_single_interior_point():
    for p in (projective_space(2), projective_space(3), simplex(4), LatticePolytope(SQUARE)):
        assert p.lattice_points()[1] == [(0,) * p.dim]


coords = st.integers(-3, 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coords, coords, coords), min_size=4, max_size=10))
def test_facets_against_qhull(points):
    if affine_rank(points) < 3:
        with pytest.raises(NotFullDimensional):
            compute_facets(points)
        return
    facets = compute_facets(points)
    assert len(facets) == hull_facet_count(points)
    assert facets == sorted(facets)
    for v, k in facets:
        assert all(dot(p, v) >= -k for p in points)
        on = [p for p in points if dot(p, v) == -k]
        assert affine_rank(on) == 2
