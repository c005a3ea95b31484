"""Lattice polytopes: facet presentation, face lattice, duality, lattice points.

A polytope lives in the lattice ``M = Z^n``.  Each facet ``A`` is written as
``<m, v_A> >= -kappa_A`` with ``v_A`` the primitive inward normal in the dual
lattice.  Facets are always kept in lexicographic order of their normals;
divisor coefficient vectors elsewhere in the package are indexed in this
order.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
import hashlib
import json
import math

import numpy as np

from .errors import (DimensionMismatch, InputError, NotFullDimensional,
                     NotReflexive, Unbounded)
from .linalg import affine_rank, cross, dot, primitive, rank, solve

__all__ = [
    "Facet", "Face", "LatticePolytope", "compute_facets", "face_lattice",
    "is_reflexive", "dual_polytope", "lattice_points",
]


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: int


@dataclass(frozen=True)
class Face:
    """A face, recorded by its vertex indices and the facets containing it."""
    dim: int
    vertices: frozenset
    facets: frozenset = field(compare=False)
    points: frozenset = field(compare=False, repr=False)


def _as_points(points):
    pts = []
    for p in points:
        row = []
        for x in p:
            if isinstance(x, bool) or int(x) != x:
                raise InputError(f"vertex coordinate {x!r} is not an integer")
            row.append(int(x))
        pts.append(tuple(row))
    if not pts:
        raise InputError("empty vertex list")
    n = len(pts[0])
    if n == 0:
        raise InputError("vertices must have positive dimension")
    for p in pts:
        if len(p) != n:
            raise DimensionMismatch(
                f"vertex {list(p)} has length {len(p)}, expected {n}")
    # dict preserves first-seen order while dropping duplicates
    return list(dict.fromkeys(pts)), n


def compute_facets(vertices):
    """Inward facet list ``[(normal, offset), ...]`` of ``conv(vertices)``.

    Candidate hyperplanes pass through ``n`` affinely independent points and
    are kept when every point lies on one side.  The list is irredundant,
    normals are primitive, and the order is lexicographic by normal.

    >>> compute_facets([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]
    """
    pts, n = _as_points(vertices)
    if len(pts) < n + 1 or affine_rank(pts) < n:
        raise NotFullDimensional(
            f"{len(pts)} points do not affinely span R^{n}")
    if n == 1:
        lo, hi = min(p[0] for p in pts), max(p[0] for p in pts)
        return [((-1,), hi), ((1,), -lo)]
    facets, tested = {}, set()
    arr = np.array(pts, dtype=object)
    for idx in combinations(range(len(pts)), n):
        p0 = pts[idx[0]]
        diffs = [tuple(a - b for a, b in zip(pts[i], p0)) for i in idx[1:]]
        normal = cross(diffs)
        if not any(normal):
            continue
        normal = primitive(normal)
        c = dot(normal, p0)
        if (normal, c) in tested:
            continue
        tested.add((normal, c))
        vals = arr.dot(np.array(normal, dtype=object))
        if all(v >= c for v in vals):
            facets[normal] = -c
        elif all(v <= c for v in vals):
            facets[tuple(-x for x in normal)] = c
    return sorted(facets.items())


def lattice_points(halfspaces):
    """Integer points of ``{m : <m, v> >= -a}`` for ``(v, a)`` in halfspaces.

    Offsets may be rational.  Returns ``(all_points, interior_points)`` where
    interior points satisfy every inequality strictly.  Raises
    :class:`Unbounded` when the region has a nontrivial recession cone.
    """
    hs = [(tuple(int(x) for x in v), Fraction(a)) for v, a in halfspaces]
    if not hs:
        raise Unbounded("no halfspaces given")
    n = len(hs[0][0])
    normals = [v for v, _ in hs]
    _check_bounded(normals, n)

    corners = []
    for sub in combinations(hs, n):
        sol = solve([v for v, _ in sub], [-a for _, a in sub])
        if sol is None:
            continue
        if all(dot(sol, v) >= -a for v, a in hs):
            corners.append(sol)
    if not corners:
        return [], []
    lo = [math.ceil(min(c[i] for c in corners)) for i in range(n)]
    hi = [math.floor(max(c[i] for c in corners)) for i in range(n)]
    if any(l > h for l, h in zip(lo, hi)):
        return [], []

    # scale to integer inequalities  A m >= -b  and scan the bounding box
    denom = math.lcm(*(a.denominator for _, a in hs))
    A = np.array(normals, dtype=np.int64) * denom
    b = np.array([int(a * denom) for _, a in hs], dtype=np.int64)
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    vals = grid @ A.T + b
    inside = np.all(vals >= 0, axis=1)
    strict = np.all(vals > 0, axis=1)
    to_list = lambda mask: [tuple(int(x) for x in p) for p in grid[mask]]
    return to_list(inside), to_list(strict)


def _check_bounded(normals, n):
    # the recession cone {m : <m, v> >= 0 for all v} is trivial iff the
    # normals span R^n and no extreme ray of it exists
    if rank(normals) < n:
        raise Unbounded("halfspace normals do not span the ambient space")
    for sub in combinations(normals, n - 1):
        d = cross([list(v) for v in sub]) if n > 1 else (1,)
        if not any(d):
            continue
        for s in (d, tuple(-x for x in d)):
            if all(dot(s, v) >= 0 for v in normals):
                raise Unbounded(f"recession direction {list(s)}")


class LatticePolytope:
    """Full-dimensional lattice polytope given by (a superset of) its vertices.

    Input points that are not vertices are dropped and reported in
    :attr:`dropped`; duplicates are silently removed.
    """

    def __init__(self, points):
        pts, n = _as_points(points)
        self.dim = n
        facet_list = compute_facets(pts)
        self.facets = tuple(Facet(v, k) for v, k in facet_list)
        vertices, dropped = [], []
        for p in pts:
            tight = [f.normal for f in self.facets
                     if dot(p, f.normal) == -f.offset]
            (vertices if rank(tight) == n else dropped).append(p)
        self.vertices = tuple(sorted(vertices))
        self.dropped = tuple(dropped)

    def __repr__(self):
        return (f"LatticePolytope(dim={self.dim}, "
                f"vertices={[list(v) for v in self.vertices]})")

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope)
                and set(self.vertices) == set(other.vertices))

    def __hash__(self):
        return hash(frozenset(self.vertices))

    @property
    def normals(self):
        return tuple(f.normal for f in self.facets)

    @property
    def offsets(self):
        return tuple(f.offset for f in self.facets)

    @cached_property
    def faces(self):
        return face_lattice(self)

    @property
    def f_vector(self):
        return tuple(len(self.faces[k]) for k in range(self.dim))

    def is_reflexive(self):
        return is_reflexive(self)

    def dual(self):
        return dual_polytope(self)

    def lattice_points(self):
        return lattice_points([(f.normal, f.offset) for f in self.facets])

    def digest(self):
        """Short content hash of the vertex set."""
        blob = json.dumps(sorted(self.vertices)).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def face_lattice(p):
    """Proper faces of ``p`` grouped by dimension ``0..n-1``.

    Faces are the nonempty intersections of facet vertex sets.  Each face
    records the exact set of facet indices containing it.
    """
    incidence = []
    for f in p.facets:
        incidence.append(frozenset(
            i for i, v in enumerate(p.vertices) if dot(v, f.normal) == -f.offset))
    seen = set(incidence)
    frontier = set(incidence)
    while frontier:
        new = set()
        for a in frontier:
            for b in incidence:
                c = a & b
                if c and c not in seen:
                    new.add(c)
        seen |= new
        frontier = new
    by_dim = {k: [] for k in range(p.dim)}
    for vs in seen:
        d = affine_rank([p.vertices[i] for i in vs])
        containing = frozenset(j for j, inc in enumerate(incidence) if vs <= inc)
        by_dim[d].append(Face(d, vs, containing,
                            frozenset(p.vertices[i] for i in vs)))
    for d in by_dim:
        by_dim[d].sort(key=lambda f: sorted(f.vertices))
    return by_dim


def is_reflexive(p):
    """True iff every facet sits at lattice distance one from the origin."""
    ok = all(f.offset == 1 for f in p.facets)
    if ok:
        _, interior = p.lattice_points()
        assert interior == [(0,) * p.dim], "reflexive polytope with extra interior points"
    return ok


def dual_polytope(p):
    """Polar dual of a reflexive polytope: the hull of its facet normals."""
    if not is_reflexive(p):
        raise NotReflexive(
            f"dual requires offsets all 1, got {sorted(set(p.offsets))}")
    return LatticePolytope(p.normals)


def product_polytope(p, q):
    """Cartesian product; reflexive when both factors are."""
    return LatticePolytope(a + b for a, b in product(p.vertices, q.vertices))
