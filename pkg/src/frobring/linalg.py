"""Exact small-matrix helpers over Python ints and Fractions.

Matrices are tuples of row tuples so they compare and hash by value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence

Matrix = tuple[tuple, ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(normalize(x) for x in row) for row in rows)


def normalize(x):
    """Collapse integral Fractions to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def identity(n: int, scale=1) -> Matrix:
    return tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n))


def diag(values: Sequence) -> Matrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0]) if a else 0} @ {len(b)}x?")
    cols = tuple(zip(*b))
    return as_matrix([[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a])


def matmul_all(*ms: Matrix) -> Matrix:
    return reduce(matmul, ms)


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a
        for rb in b
    )


def kron_all(ms: Sequence[Matrix]) -> Matrix:
    return reduce(kron, ms)


def permute(a: Matrix, perm: Sequence[int]) -> Matrix:
    """Simultaneous row/column permutation: out[i][j] = a[perm[i]][perm[j]]."""
    return tuple(tuple(a[p][q] for q in perm) for p in perm)


def permutation_matrix(phi: Sequence[int]) -> Matrix:
    """P with P[phi[j]][j] = 1, so (M P)[i][j] = M[i][phi[j]]."""
    n = len(phi)
    return tuple(tuple(int(phi[j] == i) for j in range(n)) for i in range(n))


def format_matrix(a: Matrix) -> str:
    cells = [[str(x) for x in row] for row in a]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
