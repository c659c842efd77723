"""Symmetrized weight and support enumerators of codes, and multiset counts.

A submultiset X of t.[n] is represented by its multiplicity function, a
tuple ``m`` of length n with entries in 0..t; the level set M_i(X) is
``{l : m[l] == i}``.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

from .codes import DEFAULT_CAP, LinearCode
from .errors import FamilyError, InternalError, NonPrincipalError, SizeError
from .ideals import ClassData
from .linalg import Matrix
from .poly import SSE, SWE, Enumerator
from .ring import FiniteRing, ideal_sum

MultisetX = tuple[int, ...]

ORACLE_CAP = 10 ** 5


def multisets(n: int, t: int, cap: int = ORACLE_CAP) -> Iterator[MultisetX]:
    """All multiplicity functions [n] -> {0..t}, lexicographically."""
    if (t + 1) ** n > cap:
        raise SizeError(f"(t+1)^n = {(t + 1) ** n} multisets exceeds the oracle cap {cap}")
    return itertools.product(range(t + 1), repeat=n)


def class_vector(word: Sequence[int], classes: ClassData) -> tuple[int, ...]:
    return tuple(classes.class_of[c] for c in word)


def class_vector_counts(code: LinearCode, classes: ClassData) -> Counter:
    return Counter(class_vector(w, classes) for w in code.words)


def composition(key: Sequence[int], t: int) -> tuple[int, ...]:
    comp = [0] * (t + 1)
    for i in key:
        comp[i] += 1
    return tuple(comp)


def swe(code: LinearCode, classes: ClassData) -> Enumerator:
    """Symmetrized weight enumerator: one count per class composition."""
    counts = Counter(composition(class_vector(w, classes), classes.t) for w in code.words)
    return Enumerator(SWE, classes.t, code.n, counts)


def sse(code: LinearCode, classes: ClassData) -> Enumerator:
    """Symmetrized support enumerator: one count per class vector."""
    return Enumerator(SSE, classes.t, code.n, class_vector_counts(code, classes))


def join_table(ring: FiniteRing, classes: ClassData) -> tuple[tuple[int | None, ...], ...]:
    """join[i][j]: class k with a_kR = a_iR + a_jR, or None if not principal."""
    masks = classes.ideal_masks
    return tuple(
        tuple(classes.index_of_ideal(ideal_sum(ring, mi, mj)) for mj in masks)
        for mi in masks
    )


def tuple_sse(code: LinearCode, classes: ClassData, lam: int,
              cap: int = DEFAULT_CAP) -> Enumerator:
    """lambda-tuple symmetrized support enumerator.

    Coordinate l of a tuple (c_1..c_lam) falls in the class whose ideal is
    c_1l R + ... + c_lam l R.  Each c_m l R depends only on the class of
    c_m l, so tuples are folded class-vector by class-vector.
    """
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    if code.size ** lam > cap:
        raise SizeError(f"|C|^lambda = {code.size}^{lam} exceeds the enumeration cap {cap}")
    ring = code.ring
    join = join_table(ring, classes)
    single = class_vector_counts(code, classes)
    dist = dict(single)
    for _ in range(lam - 1):
        nxt = defaultdict(int)
        for k1, c1 in dist.items():
            for k2, c2 in single.items():
                key = []
                for l, (i, j) in enumerate(zip(k1, k2)):
                    k = join[i][j]
                    if k is None:
                        raise NonPrincipalError(
                            l + 1, (ring.label(classes.reps[i]), ring.label(classes.reps[j])))
                    key.append(k)
                nxt[tuple(key)] += c1 * c2
        dist = nxt
    return Enumerator(SSE, classes.t, code.n, dist)


def tuple_swe(code: LinearCode, classes: ClassData, lam: int, cap: int = DEFAULT_CAP) -> Enumerator:
    return tuple_sse(code, classes, lam, cap).collapse()


def count_A(code: LinearCode, classes: ClassData, X: MultisetX) -> int:
    """Codewords whose symmetrized supports are exactly the level sets of X."""
    X = tuple(X)
    return sum(1 for w in code.words if class_vector(w, classes) == X)


def count_B(code: LinearCode, classes: ClassData, F: Sequence[Sequence[int]], X: MultisetX) -> int:
    """Codewords c with S_i(c) inside the union of M_j(X) over j in F_i, for all i."""
    F = _check_family(F, classes.t)
    X = tuple(X)
    return sum(
        1 for w in code.words
        if all(X[l] in F[classes.class_of[c]] for l, c in enumerate(w))
    )


def _check_family(F, t: int) -> tuple[frozenset, ...]:
    if len(F) != t + 1:
        raise FamilyError(f"family needs {t + 1} sets, got {len(F)}")
    out = []
    for i, Fi in enumerate(F):
        Fi = frozenset(int(j) for j in Fi)
        if not Fi:
            raise FamilyError(f"F_{i} is empty")
        if any(not 0 <= j <= t for j in Fi):
            raise FamilyError(f"F_{i} has indices outside 0..{t}")
        out.append(Fi)
    return tuple(out)


def family_matrix(F: Sequence[Sequence[int]], t: int) -> Matrix:
    """p_ij = 1 iff j is in F_i."""
    F = _check_family(F, t)
    return tuple(tuple(int(j in F[i]) for j in range(t + 1)) for i in range(t + 1))


@dataclass(frozen=True)
class Families:
    I: tuple[frozenset, ...]
    J: tuple[frozenset, ...]
    P_I: Matrix
    P_J: Matrix


def canonical_families(ring: FiniteRing, classes: ClassData, A: Matrix | None = None,
                       Q: Matrix | None = None) -> Families:
    """The families I and J evaluated on the representatives.

    I_i = {j : a_j a_k != 0 for every k with a_i a_k != 0}
    J_i = {j : a_kR not inside a_jR for every k with a_i a_k != 0}

    When ``A``/``Q`` are supplied, P^I == A and P^J == Q are asserted.
    """
    reps = classes.reps
    n = len(reps)
    nz = [[ring.mul[reps[i], reps[k]] != ring.zero for k in range(n)] for i in range(n)]
    masks = classes.ideal_masks
    within = [[masks[k] & ~masks[j] == 0 for j in range(n)] for k in range(n)]
    I = tuple(
        frozenset(j for j in range(n) if all(nz[j][k] for k in range(n) if nz[i][k]))
        for i in range(n)
    )
    J = tuple(
        frozenset(j for j in range(n) if all(not within[k][j] for k in range(n) if nz[i][k]))
        for i in range(n)
    )
    P_I = family_matrix(I, n - 1)
    P_J = family_matrix(J, n - 1)
    if A is not None and P_I != A:
        raise InternalError("P^I differs from the zeta matrix A")
    if Q is not None and P_J != Q:
        raise InternalError("P^J differs from Q")
    return Families(I, J, P_I, P_J)
