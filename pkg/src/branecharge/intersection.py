"""Exact intersection theory on a smooth complete toric variety.

Cycle classes are kept in the orbit-closure basis: a :class:`GradedClass` is
a rational combination of classes ``[V(sigma)]`` indexed by cones, graded by
``codim = dim sigma``.  The only product ever needed is *divisor times
cycle*, computed by

* ``D_rho . [V(sigma)] = [V(sigma + rho)]`` when ``rho`` is not in ``sigma``
  and the rays span a cone (zero when they span none), and
* for ``rho`` in ``sigma``, moving ``D_rho`` off ``sigma`` with the
  principal divisor of a character ``m`` that is 1 on ``u_rho`` and 0 on the
  remaining rays of a maximal cone containing ``sigma``.

The cone basis is not a basis of the Chow group (there are relations), so
two classes are compared with :func:`equivalent`, which pairs against every
complementary orbit closure.  Poincare duality makes that test exact.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial, comb

from .errors import InternalNonTermination, NonIntegerCoefficients
from .fan import require_smooth_complete
from .linalg import dot

__all__ = [
    "DivisorClass", "GradedClass", "divisor_mul_cycle", "multiply",
    "evaluate_polynomial", "degree", "chern_total", "c2_wall_sum",
    "todd_class", "chern_character", "is_nef", "is_ample", "equivalent",
    "pairings", "todd_coefficients",
]


class DivisorClass:
    """Rational combination of torus-invariant prime divisors ``D_rho``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {int(k): Fraction(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def canonical(cls, fan):
        """``K_X = -sum D_rho``."""
        return cls({i: -1 for i in range(len(fan.rays))})

    @classmethod
    def anticanonical(cls, fan):
        return cls({i: 1 for i in range(len(fan.rays))})

    @classmethod
    def prime(cls, i):
        return cls({i: 1})

    @classmethod
    def principal(cls, fan, m):
        """Divisor of the character ``m``: ``sum <m, u_rho> D_rho``."""
        return cls({i: dot(m, u) for i, u in enumerate(fan.rays)})

    def vector(self, nrays):
        return tuple(self.coeffs.get(i, Fraction(0)) for i in range(nrays))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return DivisorClass(out)

    def __neg__(self):
        return DivisorClass({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return DivisorClass({k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        terms = " + ".join(f"{v}*D{k}" for k, v in sorted(self.coeffs.items()))
        return f"DivisorClass({terms or '0'})"


class GradedClass:
    """Rational combination of orbit-closure classes on an n-dimensional variety.

    ``terms`` maps a cone (frozenset of ray indices) to its coefficient; the
    codimension of a term is the number of rays in its cone, so the empty
    cone stands for the fundamental class ``[X]``.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        self.dim = dim
        self.terms = {}
        for cone, c in (terms or {}).items():
            if c != 0:
                self.terms[frozenset(cone)] = Fraction(c)

    @classmethod
    def fundamental(cls, dim):
        return cls(dim, {frozenset(): 1})

    def component(self, k):
        return GradedClass(self.dim, {c: v for c, v in self.terms.items()
                                      if len(c) == k})

    def truncate(self, max_codim):
        return GradedClass(self.dim, {c: v for c, v in self.terms.items()
                                      if len(c) <= max_codim})

    def __add__(self, other):
        out = dict(self.terms)
        for c, v in other.terms.items():
            out[c] = out.get(c, 0) + v
        return GradedClass(self.dim, out)

    def __neg__(self):
        return GradedClass(self.dim, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return GradedClass(self.dim, {c: v * s for c, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1 / Fraction(s))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        # coefficient-wise; use equivalent() for equality of Chow classes
        return (isinstance(other, GradedClass) and self.dim == other.dim
                and self.terms == other.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def __repr__(self):
        if not self.terms:
            return "GradedClass(0)"
        parts = [f"{v}*V{sorted(c)}" for c, v in self.items()]
        return f"GradedClass({' + '.join(parts)})"


def _ray_times_cone(fan, rho, sigma, depth=0):
    if depth > 10 * fan.dim:
        raise InternalNonTermination(
            f"self-intersection reduction of ray {rho} on cone {sorted(sigma)} "
            "did not terminate")
    key = (rho, sigma)
    cached = fan._products.get(key)
    if cached is not None:
        return cached
    if rho not in sigma:
        tau = sigma | {rho}
        out = {tau: Fraction(1)} if tau in fan.cones else {}
    else:
        # D_rho ~ D_rho - div(m) = -sum_{r != rho} <m, u_r> D_r; every r with
        # a nonzero coefficient lies outside the maximal cone, hence outside sigma
        m = fan.dual_basis(fan.max_cone_containing(sigma))[rho]
        out = defaultdict(Fraction)
        for r, u in enumerate(fan.rays):
            if r == rho:
                continue
            c = dot(m, u)
            if c:
                for cone, v in _ray_times_cone(fan, r, sigma, depth + 1).items():
                    out[cone] -= c * v
        out = {k: v for k, v in out.items() if v}
    fan._products[key] = out
    return out


def divisor_mul_cycle(fan, D, sigma):
    """``D . [V(sigma)]`` as a class of codimension ``dim sigma + 1``."""
    require_smooth_complete(fan)
    sigma = frozenset(sigma)
    out = defaultdict(Fraction)
    for rho, a in D.coeffs.items():
        for cone, v in _ray_times_cone(fan, rho, sigma).items():
            out[cone] += a * v
    return GradedClass(fan.dim, out)


def multiply(fan, D, cls):
    """``D . cls`` for a divisor and a graded class."""
    require_smooth_complete(fan)
    out = defaultdict(Fraction)
    for sigma, c in cls.terms.items():
        if len(sigma) >= fan.dim:
            continue
        for rho, a in D.coeffs.items():
            for cone, v in _ray_times_cone(fan, rho, sigma).items():
                out[cone] += a * c * v
    return GradedClass(fan.dim, out)


def power_series(fan, D, coeffs, cls, up_to=None):
    """``sum_k coeffs[k] D^k . cls``, dropping codimensions above ``up_to``."""
    up_to = fan.dim if up_to is None else up_to
    result = GradedClass(fan.dim)
    term = cls.truncate(up_to)
    for k, c in enumerate(coeffs):
        if not term:
            break
        if c:
            result = result + term * c
        term = multiply(fan, D, term).truncate(up_to)
    return result


def evaluate_polynomial(fan, poly):
    """Cycle class of a polynomial in the ray divisors.

    ``poly`` maps monomials, written as tuples of ray indices (repeats allowed),
    to coefficients.  ``{(0, 0, 1): 2}`` is ``2 D_0^2 D_1``.
    """
    require_smooth_complete(fan)
    result = GradedClass(fan.dim)
    for mono, coef in poly.items():
        cls = GradedClass.fundamental(fan.dim)
        for rho in mono:
            cls = multiply(fan, DivisorClass.prime(rho), cls)
        result = result + cls * Fraction(coef)
    return result


def degree(cls):
    """Degree map to a point: the sum of codimension-n coefficients."""
    return sum((v for c, v in cls.terms.items() if len(c) == cls.dim), Fraction(0))


def chern_total(fan):
    """Total Chern class ``prod_rho (1 + D_rho)`` of the tangent bundle."""
    require_smooth_complete(fan)
    cls = GradedClass.fundamental(fan.dim)
    for rho in range(len(fan.rays)):
        cls = power_series(fan, DivisorClass.prime(rho), (1, 1), cls)
    return cls


def c2_wall_sum(fan):
    """Sum of ``[V(sigma)]`` over all two-dimensional cones."""
    require_smooth_complete(fan)
    return GradedClass(fan.dim, {c: 1 for c in fan.cones if len(c) == 2})


@lru_cache(maxsize=None)
def bernoulli_plus(k):
    """Bernoulli number with the ``B_1 = +1/2`` convention."""
    b = [Fraction(1)]
    for m in range(1, k + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / Fraction(m + 1))
    return -b[k] if k == 1 else b[k]


def todd_coefficients(k):
    """Taylor coefficients of ``x / (1 - exp(-x))`` up to ``x^k``."""
    return tuple(bernoulli_plus(j) / factorial(j) for j in range(k + 1))


def todd_class(fan, up_to=None):
    """Todd class ``prod_rho td(D_rho)`` truncated at codimension ``up_to``."""
    require_smooth_complete(fan)
    up_to = fan.dim if up_to is None else min(up_to, fan.dim)
    series = todd_coefficients(up_to)
    cls = GradedClass.fundamental(fan.dim)
    for rho in range(len(fan.rays)):
        cls = power_series(fan, DivisorClass.prime(rho), series, cls, up_to)
    return cls


def exp_coefficients(k):
    return tuple(Fraction(1, factorial(j)) for j in range(k + 1))


def chern_character(fan, D, up_to=None):
    """``ch(O(D)) = exp(D)`` truncated at codimension ``up_to``."""
    require_smooth_complete(fan)
    up_to = fan.dim if up_to is None else min(up_to, fan.dim)
    return power_series(fan, D, exp_coefficients(up_to),
                        GradedClass.fundamental(fan.dim), up_to)


def _support_vertices(fan, D):
    # m_sigma with <m_sigma, u_rho> = -a_rho on each maximal cone
    for sigma in fan.max_cones:
        basis = fan.dual_basis(sigma)
        m = [Fraction(0)] * fan.dim
        for rho, mr in basis.items():
            a = D.coeffs.get(rho, 0)
            for i in range(fan.dim):
                m[i] -= a * mr[i]
        yield sigma, tuple(m)


def _require_integral(D):
    bad = [v for v in D.coeffs.values() if v.denominator != 1]
    if bad:
        raise NonIntegerCoefficients(f"divisor coefficients {bad} are not integers")


def is_nef(fan, D):
    """Convexity of the support function of an integral divisor."""
    require_smooth_complete(fan)
    _require_integral(D)
    for sigma, m in _support_vertices(fan, D):
        for rho, u in enumerate(fan.rays):
            if dot(m, u) < -D.coeffs.get(rho, 0):
                return False
    return True


def is_ample(fan, D):
    """Strict convexity: ``<m_sigma, u_rho> > -a_rho`` off every maximal cone."""
    require_smooth_complete(fan)
    _require_integral(D)
    for sigma, m in _support_vertices(fan, D):
        for rho, u in enumerate(fan.rays):
            if rho not in sigma and dot(m, u) <= -D.coeffs.get(rho, 0):
                return False
    return True


def _pair_with_cone(fan, cls, tau):
    for rho in tau:
        cls = multiply(fan, DivisorClass.prime(rho), cls)
    return degree(cls)


def pairing_vector(fan, cls, k):
    """Degrees of ``cls_k . [V(tau)]`` over all cones ``tau`` of dim ``n-k``."""
    part = cls.component(k)
    return tuple(_pair_with_cone(fan, part, tau)
                 for tau in fan.cones_of_dim(fan.dim - k))


def equivalent(fan, a, b):
    """Equality of Chow classes (rational equivalence), codim by codim."""
    require_smooth_complete(fan)
    diff = a - b
    for k in range(fan.dim + 1):
        part = diff.component(k)
        if part and any(pairing_vector(fan, part, k)):
            return False
    return True


def pairings(fan, cls, A):
    """``[deg(cls_k . A^(n-k)) for k = 0..n]`` for a test divisor ``A``."""
    out = []
    for k in range(fan.dim + 1):
        part = cls.component(k)
        for _ in range(fan.dim - k):
            part = multiply(fan, A, part)
        out.append(degree(part))
    return out
