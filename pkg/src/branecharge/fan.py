"""Fans in the lattice N and the normal fan of a lattice polytope.

Cones are stored as frozensets of ray indices.  Equality of cones is set
equality, which is sound for the simplicial fans the intersection code
works with.
"""

from collections import Counter, deque
from functools import cached_property
from itertools import combinations
import hashlib
import json

from .errors import FaceNotOfThisPolytope, InputError, NotComplete, NotSmooth
from .linalg import det, inverse_columns, rank

__all__ = [
    "Fan", "normal_fan", "is_smooth", "is_complete", "minimal_cone_over",
    "face_to_cone",
]


class Fan:
    """A rational polyhedral fan.

    Parameters
    ----------
    rays : sequence of integer vectors
        Primitive ray generators ``u_0, ..., u_{r-1}``.
    cones : iterable of iterables of ray indices
        Every cone of the fan, faces included.  The zero cone is added if
        missing.
    polytope : LatticePolytope, optional
        The polytope whose normal fan this is.
    """

    def __init__(self, rays, cones, polytope=None):
        self.rays = tuple(tuple(int(x) for x in u) for u in rays)
        if not self.rays:
            raise InputError("a fan needs at least one ray")
        self.dim = len(self.rays[0])
        cones = {frozenset(c) for c in cones} | {frozenset()}
        for c in cones:
            if any(not 0 <= i < len(self.rays) for i in c):
                raise InputError(f"cone {sorted(c)} refers to a missing ray")
        self.cones = frozenset(cones)
        self.polytope = polytope
        self._face_cones = None
        # (ray, cone) -> cycle product, filled by the intersection module
        self._products = {}

    @classmethod
    def from_maximal_cones(cls, rays, max_cones):
        """Simplicial fan from its maximal cones; all subsets become cones."""
        cones = set()
        for c in max_cones:
            c = tuple(c)
            for k in range(len(c) + 1):
                cones.update(frozenset(s) for s in combinations(c, k))
        return cls(rays, cones)

    def __repr__(self):
        return f"Fan(dim={self.dim}, rays={len(self.rays)}, max_cones={len(self.max_cones)})"

    @cached_property
    def max_cones(self):
        return tuple(sorted((c for c in self.cones
                             if not any(c < d for d in self.cones)),
                            key=sorted))

    def cones_of_dim(self, k):
        return sorted((c for c in self.cones if len(c) == k), key=sorted)

    def max_cone_containing(self, cone):
        for m in self.max_cones:
            if cone <= m:
                return m
        raise InputError(f"{sorted(cone)} is not contained in a cone of the fan")

    def dual_basis(self, max_cone):
        """``{ray: m}`` with ``<m, u_ray> = 1`` and zero on the other rays of
        the (unimodular) maximal cone."""
        key = ("dual", max_cone)
        if key not in self._products:
            idx = sorted(max_cone)
            ms = inverse_columns([self.rays[i] for i in idx])
            self._products[key] = dict(zip(idx, ms))
        return self._products[key]

    def digest(self):
        if self.polytope is not None:
            return self.polytope.digest()
        blob = json.dumps([self.rays, [sorted(c) for c in self.max_cones]])
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    @cached_property
    def smooth(self):
        return is_smooth(self)

    @cached_property
    def complete(self):
        return is_complete(self)


def normal_fan(p):
    """Normal fan of a full-dimensional lattice polytope.

    Rays are the facet normals in canonical order.  The cone of a face is
    spanned by the normals of the facets containing it, so codimension-k
    faces correspond to k-dimensional cones and vertices to maximal cones.
    """
    cones = {frozenset(p.vertices): frozenset()}
    for faces in p.faces.values():
        for face in faces:
            cones[face.points] = face.facets
    f = Fan(p.normals, cones.values(), polytope=p)
    f._face_cones = cones
    return f


def is_smooth(f):
    """Every maximal cone is generated by part of a Z-basis of full rank."""
    for c in f.max_cones:
        if len(c) != f.dim:
            return False
        if abs(det([f.rays[i] for i in sorted(c)])) != 1:
            return False
    return bool(f.max_cones)


def is_complete(f):
    """Walls lie in exactly two maximal cones, and the maximal cones are
    connected through walls."""
    n = f.dim
    maxes = f.max_cones
    if not maxes or any(len(c) < n or rank([f.rays[i] for i in c]) < n
                        for c in maxes):
        return False
    walls = Counter()
    adjacency = {c: [] for c in maxes}
    by_wall = {}
    for c in maxes:
        for w in f.cones:
            if w < c and rank([f.rays[i] for i in w]) == n - 1:
                walls[w] += 1
                by_wall.setdefault(w, []).append(c)
    if any(v != 2 for v in walls.values()):
        return False
    for a, b in by_wall.values():
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen, queue = {maxes[0]}, deque([maxes[0]])
    while queue:
        for d in adjacency[queue.popleft()]:
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return len(seen) == len(maxes)


def minimal_cone_over(f, rays):
    """The cone of ``f`` whose ray set is exactly ``rays``, else None."""
    c = frozenset(rays)
    return c if c in f.cones else None


def face_to_cone(f, face):
    """Cone of the normal fan attached to a face of the defining polytope.

    ``face`` is a :class:`~branecharge.polytope.Face` or the polytope itself,
    which maps to the zero cone.
    """
    key = frozenset(face.vertices) if face is f.polytope else getattr(face, "points", None)
    if f._face_cones is None or key not in f._face_cones:
        raise FaceNotOfThisPolytope(
            f"face with vertices {sorted(face.vertices)} is not a face of the "
            "polytope defining this fan")
    return f._face_cones[key]


def require_smooth_complete(f):
    if not f.smooth:
        raise NotSmooth("the fan has a maximal cone that is not unimodular")
    if not f.complete:
        raise NotComplete("the fan does not cover N_R")
