"""Matrices over Z[q, q^-1]: products and fraction-free determinants."""

from __future__ import annotations

from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly

Matrix = list[list[LaurentPoly]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if not x:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    out[i][j] = out[i][j] + x * bk[j]
    return out


def mat_vec(a: Sequence[Sequence[LaurentPoly]], v: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def bareiss_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by Bareiss elimination with exact division in Z[q^+-].

    Entries are first shifted by a common power of q so that they are honest
    polynomials; the shift is undone on the result.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    exps = [x.min_exp() for row in m for x in row if x]
    if not exps:
        return ZERO
    s = -min(exps)
    a = [[x.shift(s) for x in row] for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = ZERO
        prev = pivot
    det = a[n - 1][n - 1] * sign
    return det.shift(-s * n)


def is_square(m: Sequence[Sequence]) -> bool:
    return all(len(row) == len(m) for row in m)
