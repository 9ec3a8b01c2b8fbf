"""Exact integer matrix arithmetic on plain nested tuples.

Everything here uses Python integers, so results are exact at any size.
Matrices are tuples of row tuples; vectors are tuples of ints.
"""

from fractions import Fraction

from .errors import NotUnimodularError

Matrix = tuple  # tuple of row tuples of int
Vector = tuple


def as_matrix(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def mat_vec(m, v):
    if len(v) != len(m[0]):
        raise ValueError(f"dimension mismatch: matrix is {len(m)}x{len(m[0])}, "
                         f"vector has length {len(v)}")
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def mat_mul(a, b):
    k = len(b)
    return tuple(
        tuple(sum(ra[i] * b[i][j] for i in range(k)) for j in range(len(b[0])))
        for ra in a
    )


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_pow(m, e):
    if e < 0:
        raise ValueError("negative exponent; invert first")
    result = identity(len(m))
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def det(m):
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    k = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * a[k - 1][k - 1]


def inverse_unimodular(m):
    """Exact integer inverse of a matrix with det = +-1.

    Raises NotUnimodularError (carrying the determinant) otherwise.
    """
    d = det(m)
    if d not in (1, -1):
        raise NotUnimodularError(d)
    k = len(m)
    # Gauss-Jordan over exact rationals; entries of the result are integers
    # because the determinant is a unit.
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(m)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    inv = tuple(tuple(int(v) for v in row[k:]) for row in aug)
    return inv


def is_nonnegative(v):
    return all(x >= 0 for x in v)
