"""Small dense integer/rational matrix helpers.

Matrices are tuples of row tuples. Everything is exact; sizes here are
2g x 2g with g in the single digits, so plain Python loops are fine.
"""
from fractions import Fraction
from math import gcd

Matrix = tuple  # tuple[tuple[int, ...], ...]


def as_matrix(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n, m=None):
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def scale(a, s):
    return tuple(tuple(s * x for x in row) for row in a)


def matpow(a, k):
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def block_diag(a, b):
    n, m = len(a), len(b)
    rows = [tuple(row) + (0,) * m for row in a]
    rows += [(0,) * n + tuple(row) for row in b]
    return tuple(rows)


def det(a):
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a):
    """Coefficients of det(t*I - a), leading coefficient first.

    Faddeev-LeVerrier over the rationals; results are integers for integer
    input.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    m = zeros(n)
    for k in range(1, n + 1):
        am = matmul(a, m)
        m = tuple(
            tuple(x + (coeffs[-1] if i == j else 0) for j, x in enumerate(row))
            for i, row in enumerate(am)
        )
        am = matmul(a, m)
        coeffs.append(-Fraction(sum(am[i][i] for i in range(n)), k))
    return tuple(int(c) for c in coeffs)


def rank_q(vectors):
    """Rank over Q of a list of integer vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def content(v):
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
