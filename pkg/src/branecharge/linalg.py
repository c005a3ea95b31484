"""Small exact linear algebra over Z and Q.

Matrices here are tiny (n <= 4 for every computation the package does), so
plain nested tuples with :class:`fractions.Fraction` entries are used instead
of a general linear algebra backend.
"""

from fractions import Fraction
from math import gcd
from functools import reduce


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, (abs(x) for x in v), 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def det(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cross(rows):
    """Generalized cross product of n-1 vectors in dimension n.

    The result is orthogonal to every input row; it vanishes exactly when the
    rows are linearly dependent.
    """
    n = len(rows) + 1
    out = []
    for i in range(n):
        minor = [r[:i] + r[i + 1:] for r in rows]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def affine_rank(points):
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    return rank([tuple(a - b for a, b in zip(p, p0)) for p in points[1:]])


def solve(rows, rhs):
    """Solve a square nonsingular system exactly; returns None when singular."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return tuple(r[n] for r in m)


def inverse_columns(rows):
    """Dual basis of a nonsingular square matrix.

    Returns vectors ``m_j`` with ``dot(m_j, rows[i]) == (i == j)``.
    """
    n = len(rows)
    return [solve(rows, [int(i == j) for i in range(n)]) for j in range(n)]
