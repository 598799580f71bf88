"""Exact rational linear algebra on lists of ``Fraction`` vectors.

Rank uses fraction-free (Bareiss) elimination on an integer matrix obtained
by clearing denominators row by row, so no intermediate fractions appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Vector = tuple  # tuple[Fraction, ...]


def vec(entries) -> Vector:
    return tuple(Fraction(x) for x in entries)


def _integer_rows(rows: Sequence[Sequence]) -> list:
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, n_rows):
            f = a[r][col]
            for c in range(col, n_cols):
                # exact division is the Bareiss invariant
                a[r][c] = (p * a[r][c] - f * a[rank][c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the span of ``vectors`` (rows or columns, it is the same)."""
    if not vectors:
        return 0
    return bareiss_rank(_integer_rows(vectors))


def rref(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    if not a:
        return a, pivots
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a, pivots


def kernel(rows: Sequence[Sequence], n_cols: int | None = None) -> list:
    """Basis of ``{v : row . v = 0 for every row}``.

    The basis has ``n_cols - rank`` vectors, one per free column.
    """
    if n_cols is None:
        n_cols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def vec_mat(v: Sequence, m: Sequence[Sequence]) -> Vector:
    cols = len(m[0])
    return tuple(sum((v[i] * m[i][j] for i in range(len(v))), Fraction(0)) for j in range(cols))


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    ru, rv = rank(u), rank(v)
    return ru == rv == rank(list(u) + list(v))


def contains(big: Sequence[Sequence], small: Sequence[Sequence]) -> bool:
    """True iff span(small) is inside span(big)."""
    return rank(list(big) + list(small)) == rank(big)
