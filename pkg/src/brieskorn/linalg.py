"""Fraction-free (Bareiss) elimination on integer matrices.

Matrices are tuples of tuples of Python ints; results are exact.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def bareiss_determinant(rows) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def adjugate_and_det(rows) -> tuple[list[list[int]], int]:
    """Return ``(adj, det)`` with ``rows @ adj == det * I``.

    Fraction-free Gauss-Jordan on ``[A | I]``: after step k every diagonal
    entry of the eliminated block equals the current pivot, so at the end
    the left block is ``det * I`` and the right block is the adjugate.
    """
    n = len(rows)
    width = 2 * n
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                raise DomainError("matrix is singular")
        pivot = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            f = ri[k]
            for j in range(width):
                if j != k:
                    ri[j] = (pivot * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    det = prev
    adj = [row[n:] for row in a]
    if sign < 0:
        # row swaps permute the identity block; the left block is still
        # det_swapped * I, so rescale to the true determinant
        det = -det
        adj = [[-x for x in row] for row in adj]
    return adj, det


def exact_inverse_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    adj, det = adjugate_and_det(rows)
    return tuple(tuple(Fraction(x, det) for x in row) for row in adj)


def leading_minors(rows) -> list[int]:
    """All leading principal minors d1, ..., dn (exact).

    Bareiss without pivoting yields them as successive pivots; a zero
    pivot is continued by computing the remaining minors directly.
    """
    a = [list(r) for r in rows]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            return minors + [bareiss_determinant([r[: j + 1] for r in rows[: j + 1]]) for j in range(k, n)]
        minors.append(pivot)
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return minors


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
