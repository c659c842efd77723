"""The MacWilliams transform matrices S = Q D A^-1 and S^[lam] = Q D^lam A^-1."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import InternalError, OrderError
from .ideals import ClassData, PosetData, mobius_matrix, zeta_matrix
from .linalg import (Matrix, diag, kron_all, matmul, matmul_all, permutation_matrix)
from .ring import FiniteRing, annihilator_mask


@dataclass(frozen=True)
class PosetMatrices:
    A: Matrix
    A_inv: Matrix
    D: Matrix
    Q: Matrix
    S: Matrix

    @property
    def size(self) -> int:
        return len(self.A)

    def D_power(self, lam: int) -> Matrix:
        return diag([self.D[i][i] ** lam for i in range(self.size)])

    def S_lambda(self, lam: int) -> Matrix:
        if lam < 1:
            raise ValueError("lambda must be a positive integer")
        if lam == 1:
            return self.S
        return matmul_all(self.Q, self.D_power(lam), self.A_inv)


def q_from_products(ring: FiniteRing, classes: ClassData, po: PosetData) -> Matrix:
    """Q built from products of representatives.

    q_ij = 0 iff a_i != 0 and a_i a_k != 0 for some k with a_kR inside a_jR.
    """
    reps = classes.reps
    n = len(reps)
    nonzero = [[ring.mul[reps[i], reps[k]] != ring.zero for k in range(n)] for i in range(n)]
    return tuple(
        tuple(
            0 if reps[i] != ring.zero and any(po.leq[k][j] and nonzero[i][k] for k in range(n)) else 1
            for j in range(n)
        )
        for i in range(n)
    )


def q_from_annihilators(ring: FiniteRing, classes: ClassData) -> Matrix:
    """q_ij = 1 iff a_jR is contained in Ann(a_i)."""
    masks = classes.ideal_masks
    anns = [annihilator_mask(ring, m) for m in masks]
    return tuple(tuple(int(mj & ~ann == 0) for mj in masks) for ann in anns)


def build_matrices(ring: FiniteRing, classes: ClassData, po: PosetData) -> PosetMatrices:
    A = zeta_matrix(po)
    A_inv = mobius_matrix(A)
    D = diag(classes.ideal_size)
    Q = q_from_annihilators(ring, classes)
    if Q != q_from_products(ring, classes, po):
        raise InternalError("the two definitions of Q disagree")
    S = matmul_all(Q, D, A_inv)
    if any(not isinstance(x, int) for row in S for x in row):
        raise InternalError("Q D A^-1 is not an integer matrix")
    return PosetMatrices(A, A_inv, D, Q, S)


@dataclass(frozen=True)
class PirDecomposition:
    """Q = A P(phi) where phi is the annihilator involution on classes."""

    phi: tuple[int, ...]
    qaj: bool


def pir_decomposition(matrices: PosetMatrices, po: PosetData) -> PirDecomposition | None:
    """Factor Q through a permutation of A; ``None`` when R is not a PIR."""
    if not po.is_pir:
        return None
    phi = tuple(po.ann_class)
    if any(p is None for p in phi):
        raise InternalError("PIR with a non-principal annihilator")
    if matmul(matrices.A, permutation_matrix(phi)) != matrices.Q:
        raise InternalError("Q != A P for the annihilator permutation")
    t = len(phi) - 1
    return PirDecomposition(phi, all(phi[i] == t - i for i in range(t + 1)))


def qaj_order(ring: FiniteRing, classes: ClassData, po: PosetData) -> tuple[int, ...] | None:
    """Representatives for which (a_iR)^perp = a_{t-i}R, so that Q = A J.

    Classes are paired by the annihilator involution; each pair occupies
    mirrored positions with the smaller ideal first, and a self-dual class
    (at most one exists) takes the middle.  Returns ``None`` for non-PIRs.
    """
    if not po.is_pir:
        return None
    phi = po.ann_class
    size = classes.ideal_size
    fixed = [i for i in range(len(phi)) if phi[i] == i]
    if len(fixed) > 1:
        return None
    pairs = sorted(
        {tuple(sorted((i, phi[i]), key=lambda k: (size[k], classes.reps[k]))) for i in range(len(phi)) if phi[i] != i},
        key=lambda p: (size[p[0]], classes.reps[p[0]]),
    )
    t = len(phi) - 1
    slots = [None] * (t + 1)
    for pos, (lo, hi) in enumerate(pairs):
        slots[pos] = lo
        slots[t - pos] = hi
    if fixed:
        slots[t // 2] = fixed[0]
    return tuple(classes.reps[k] for k in slots)


def chain_ring_closed_form(q: int, nu: int, lam: int = 1) -> Matrix:
    """S^[lam] for a chain ring with residue field size q and nilpotency nu."""
    if q < 2 or nu < 1 or lam < 1:
        raise ValueError("need q >= 2, nu >= 1, lambda >= 1")
    Q = q ** lam

    def entry(i, j):
        if j == 0:
            return 1
        if 1 <= j <= nu - i:
            return Q ** j - Q ** (j - 1)
        if j == nu + 1 - i:
            return -Q ** (nu - i)
        return 0

    return tuple(tuple(entry(i, j) for j in range(nu + 1)) for i in range(nu + 1))


def product_rep_order(ring: FiniteRing, factor_classes: Sequence[ClassData]) -> tuple[int, ...]:
    """Representatives of a product ring in lexicographic order of factor classes."""
    if len(factor_classes) != len(ring.factors):
        raise OrderError(f"ring has {len(ring.factors)} factors, got {len(factor_classes)} class lists")
    sizes = [f.size for f in ring.factors]
    radix = [prod(sizes[k + 1:]) for k in range(len(sizes))]
    return tuple(
        sum(fc.reps[i] * r for fc, i, r in zip(factor_classes, combo, radix))
        for combo in itertools.product(*(range(len(fc.reps)) for fc in factor_classes))
    )


def kronecker_check(factors: Sequence[PosetMatrices], product: PosetMatrices) -> bool:
    """True iff A, D, Q of the product are Kronecker products of the factors'."""
    expected = prod(f.size for f in factors)
    if product.size != expected:
        raise OrderError(f"product has {product.size} classes, factors give {expected}")
    return all(
        getattr(product, name) == kron_all([getattr(f, name) for f in factors])
        for name in ("A", "D", "Q")
    )
