"""Brute-force oracles relating enumerators to multiset counts.

Every check returns ``(ok, detail)`` where ``detail`` describes the first
disagreement, so test failures show a concrete counterexample.
"""

from __future__ import annotations

import random
from math import prod
from typing import Sequence

from .codes import LinearCode, dual
from .enumerators import (ORACLE_CAP, _check_family, canonical_families, composition, count_A,
                          count_B, family_matrix, multisets, sse, swe, tuple_sse)
from .ideals import ClassData
from .poly import SSE, SWE, Enumerator
from .verify import transform_sse, transform_swe


def random_family(t: int, rng: random.Random) -> tuple[frozenset, ...]:
    """t+1 random nonempty subsets of 0..t."""
    out = []
    for _ in range(t + 1):
        s = frozenset(j for j in range(t + 1) if rng.random() < 0.5)
        out.append(s or frozenset({rng.randrange(t + 1)}))
    return tuple(out)


def precedes(X: Sequence[int], Y: Sequence[int], F) -> bool:
    """X <= Y: every coordinate in M_i(X) lies in M_j(Y) for some j in F_i.

    Implemented literally; no order axioms are assumed.
    """
    return all(y in F[x] for x, y in zip(X, Y))


def swe_family_oracle(code: LinearCode, classes: ClassData, F, cap: int = ORACLE_CAP):
    """swe_C(P^F y) against the sum over Y of B^F_C(Y) prod_j y_j^{|M_j(Y)|}."""
    t = classes.t
    F = _check_family(F, t)
    lhs = transform_swe(swe(code, classes), family_matrix(F, t))
    rhs = {}
    for Y in multisets(code.n, t, cap):
        b = count_B(code, classes, F, Y)
        if b:
            key = composition(Y, t)
            rhs[key] = rhs.get(key, 0) + b
    rhs = Enumerator(SWE, t, code.n, rhs)
    return lhs == rhs, f"lhs {lhs} | rhs {rhs}"


def sse_family_oracle(code: LinearCode, classes: ClassData, F, cap: int = ORACLE_CAP):
    """sse_C(P^F Y) against the sum over Y of B^F_C(Y) prod_l y_{m_Y(l), l}."""
    t = classes.t
    F = _check_family(F, t)
    lhs = transform_sse(sse(code, classes), family_matrix(F, t))
    rhs = Enumerator(SSE, t, code.n, {Y: count_B(code, classes, F, Y) for Y in multisets(code.n, t, cap)})
    return lhs == rhs, f"lhs {lhs} | rhs {rhs}"


def dual_count_oracle(code: LinearCode, classes: ClassData, cap: int = ORACLE_CAP):
    """B^I_{C^perp}(X) |C| = prod_i |a_iR|^{|M_i(X)|} B^J_C(X) for every X."""
    fam = canonical_families(code.ring, classes)
    d = dual(code)
    sizes = classes.ideal_size
    for X in multisets(code.n, classes.t, cap):
        left = count_B(d, classes, fam.I, X) * code.size
        right = prod(sizes[i] for i in X) * count_B(code, classes, fam.J, X)
        if left != right:
            return False, f"X={X}: {left} != {right}"
    return True, ""


def tuple_count_oracle(code: LinearCode, classes: ClassData, lam: int, cap: int = ORACLE_CAP):
    """(B^I_C(Y))^lam = sum over X <= Y of A^[lam]_C(X), with <= taken for F = I."""
    fam = canonical_families(code.ring, classes)
    A_lam = tuple_sse(code, classes, lam)
    Xs = list(multisets(code.n, classes.t, cap))
    for Y in Xs:
        left = count_B(code, classes, fam.I, Y) ** lam
        right = sum(A_lam.coefficient(X) for X in Xs if precedes(X, Y, fam.I))
        if left != right:
            return False, f"Y={Y}: {left} != {right}"
    return True, ""


def tuple_count_matches_scan(code: LinearCode, classes: ClassData, cap: int = ORACLE_CAP) -> bool:
    """At lambda = 1 the tuple count is the plain count_A."""
    e = tuple_sse(code, classes, 1)
    return all(e.coefficient(X) == count_A(code, classes, X) for X in multisets(code.n, classes.t, cap))
