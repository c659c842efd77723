"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
"""

import random
import time

import pytest

from frobring.catalog import CATALOG, FROBENIUS_RINGS, PIR_RINGS, builtin, paper_order
from frobring.codes import column_span_size, dual, span
from frobring.enumerators import sse, tuple_sse
from frobring.ideals import associate_classes, poset
from frobring.linalg import identity, matmul
from frobring.oracles import (dual_count_oracle, random_family, sse_family_oracle, swe_family_oracle,
                              tuple_count_oracle)
from frobring.transform import build_matrices, chain_ring_closed_form, kronecker_check, product_rep_order
from frobring.verify import verify_identity, verify_lee, verify_slwe
from test_ideals import F2UV_SQUARES_A, Z12_A
from test_transform import F2UV_SQUARES_Q, F2UV_SQUARES_S, F2UV_SEMI_S, PIR6_Q, Z12_S, Z4X_S

Z6_C = {(0, 0), (1, 4), (2, 2), (3, 0), (4, 4), (5, 2)}
Z6_DUAL = {(0, 0), (2, 1), (4, 2), (0, 3), (2, 4), (4, 5)}


def diag(*values):
    return tuple(tuple(v if i == j else 0 for j in range(len(values))) for i, v in enumerate(values))


def report(label, ok, elapsed, limit=None, detail=""):
    timely = limit is None or elapsed < limit
    status = "PASS" if ok and timely else "FAIL"
    budget = f" (limit {limit:g} s)" if limit else ""
    print(f"\n{status} {label}: {elapsed:.3f} s{budget}{' ' + detail if detail else ''}")
    assert ok, detail or label
    assert timely, f"{label} took {elapsed:.2f} s, limit {limit} s"


def setup(name, order=True):
    R = builtin(name)
    cl = associate_classes(R, paper_order(name, R) if order else None)
    return R, cl, build_matrices(R, cl, poset(R, cl))


def random_code(R, rng, max_n=3):
    n = rng.randint(1, max_n)
    return span(R, [[rng.randrange(R.size) for _ in range(n)] for _ in range(rng.randint(1, 2))], n=n)


GOLDEN = {
    "Z12": (Z12_A, diag(1, 2, 3, 4, 6, 12), PIR6_Q, Z12_S),
    "F2+uF2+vF2": (Z12_A, diag(1, 2, 2, 4, 4, 8), PIR6_Q, F2UV_SEMI_S),
    "F2[u,v]/<u^2,v^2>": (F2UV_SQUARES_A, diag(1, 16, 4, 4, 4, 2), F2UV_SQUARES_Q, F2UV_SQUARES_S),
}


@pytest.mark.parametrize("name", list(GOLDEN) + ["Z4[x]/<x^3-2,2x>"])
def test_criterion_1_golden_matrices(name):
    start = time.perf_counter()
    R, cl, M = setup(name)
    if name in GOLDEN:
        ok = (M.A, M.D, M.Q, M.S) == GOLDEN[name]
    else:
        ok = M.S == Z4X_S
    report(f"criterion 1 golden matrices {name}", ok, time.perf_counter() - start, 1.0)


def test_criterion_2_z6_end_to_end():
    start = time.perf_counter()
    R, cl, M = setup("Z6")
    C = span(R, [(1, 4)])
    D = dual(C)
    ok = set(C.words) == Z6_C and set(D.words) == Z6_DUAL
    coeffs = [sorted(e.terms.values()) for e in (sse(C, cl), sse(D, cl), tuple_sse(C, cl, 2), tuple_sse(D, cl, 2))]
    ok &= coeffs == [[1, 1, 2, 2], [1, 1, 2, 2], [1, 3, 8, 24], [1, 3, 8, 24]]
    ok &= str(sse(C, cl)) == "x0_1*x0_2 + x0_2*x1_1 + 2*x2_1*x2_2 + 2*x2_2*x3_1"
    ok &= str(tuple_sse(D, cl, 2)) == "x0_1*x0_2 + 3*x0_1*x1_2 + 8*x2_1*x2_2 + 24*x2_1*x3_2"
    for kind, lam in (("swe", 1), ("sse", 1), ("tuple_sse", 2), ("tuple_swe", 2)):
        ok &= verify_identity(kind, C, lam, cl).equal
    report("criterion 2 Z6 end to end", ok, time.perf_counter() - start, 1.0)


def test_criterion_3_involution():
    start = time.perf_counter()
    bad = []
    for name in FROBENIUS_RINGS:
        R, cl, M = setup(name)
        if matmul(M.S, M.S) != identity(len(M.S), R.size):
            bad.append((name, 1))
        if name in PIR_RINGS:
            for lam in (2, 3):
                S = M.S_lambda(lam)
                if matmul(S, S) != identity(len(S), R.size ** lam):
                    bad.append((name, lam))
    R, cl, M = setup("F2[u,v]/<u^2,v^2>")
    S2 = M.S_lambda(2)
    negative = matmul(S2, S2) != identity(len(S2), R.size ** 2)
    report("criterion 3 involution law", not bad and negative, time.perf_counter() - start, 1.0,
           f"failures {bad}" if bad else "")


def test_criterion_4_chain_closed_form():
    start = time.perf_counter()
    ok = True
    for name in ("Z4", "Z8", "Z9", "Z4[x]/<x^3-2,2x>"):
        q, nu = CATALOG[name].chain
        R, cl, M = setup(name, order=False)
        for lam in (1, 2):
            ok &= chain_ring_closed_form(q, nu, lam) == M.S_lambda(lam)
    ok &= CATALOG["Z4[x]/<x^3-2,2x>"].chain == (2, 4)
    report("criterion 4 chain ring closed form", ok, time.perf_counter() - start)


def test_criterion_5_randomized_identities():
    start = time.perf_counter()
    rng = random.Random(2024)
    failures = []
    count = 0
    for name in FROBENIUS_RINGS:
        R, cl, M = setup(name)
        for _ in range(20):
            C = random_code(R, rng)
            D = dual(C)
            count += 1
            checks = {
                "product law": C.size * D.size == R.size ** C.n,
                "double dual": dual(D).words == C.words,
                "column span": column_span_size(C) == C.size,
                "hamming": verify_identity("hamming", C, classes=cl).equal,
                "swe": verify_identity("swe", C, classes=cl).equal,
            }
            failures += [(name, C.generators, k) for k, v in checks.items() if not v]
    report("criterion 5 randomized identity suite", not failures, time.perf_counter() - start, 60.0,
           f"{count} codes" + (f", failures {failures[:3]}" if failures else ""))


def test_criterion_6_oracles():
    start = time.perf_counter()
    rng = random.Random(7)
    failures = []
    for name in ("Z6", "GF3"):
        R, cl, M = setup(name)
        for n in (1, 2):
            C = random_code(R, rng, max_n=n)
            for _ in range(5):
                F = random_family(cl.t, rng)
                for oracle in (swe_family_oracle, sse_family_oracle):
                    ok, detail = oracle(C, cl, F)
                    if not ok:
                        failures.append((name, oracle.__name__, detail))
            ok, detail = dual_count_oracle(C, cl)
            if not ok:
                failures.append((name, "dual count", detail))
    R, cl, M = setup("Z6")
    for C in (span(R, [(1, 4)]), random_code(R, rng, max_n=2)):
        for lam in (1, 2):
            ok, detail = tuple_count_oracle(C, cl, lam)
            if not ok:
                failures.append(("Z6", f"tuple lambda={lam}", detail))
    report("criterion 6 oracle suite", not failures, time.perf_counter() - start, 120.0,
           f"failures {failures[:3]}" if failures else "")


def test_criterion_7_hamming_invariants():
    start = time.perf_counter()
    bad = []
    for name in FROBENIUS_RINGS:
        # the default order puts 0 first and 1 last
        R, cl, M = setup(name, order=False)
        t = cl.t
        assert cl.reps[0] == R.zero and cl.reps[t] == R.one
        for i, row in enumerate(M.S):
            if row[0] != 1 or sum(row[1:]) != (R.size - 1 if i == 0 else -1):
                bad.append((name, "S", i))
        for k, row in enumerate(M.A_inv):
            if row[0] != (1 if k == 0 else 0) or sum(row) != (1 if k == t else 0):
                bad.append((name, "A^-1", k))
    report("criterion 7 Hamming derivation invariants", not bad, time.perf_counter() - start,
           detail=f"failures {bad}" if bad else "")


def test_criterion_8_lee():
    start = time.perf_counter()
    R, cl, M = setup("F2+uF2+vF2")
    rng = random.Random(11)
    bad = []
    for _ in range(10):
        C = random_code(R, rng)
        if not (verify_lee(C, cl).equal and verify_slwe(C, cl).equal):
            bad.append(C.generators)
    report("criterion 8 Lee reproduction", not bad, time.perf_counter() - start,
           detail=f"failures {bad}" if bad else "10 codes")


def test_criterion_9_kronecker():
    start = time.perf_counter()
    ok = True
    for prod, factors in (("Z2xZ3", ("GF2", "GF3")), ("Z2xZ2", ("GF2", "GF2"))):
        P = builtin(prod)
        parts = [setup(f, order=False) for f in factors]
        cl = associate_classes(P, product_rep_order(P, [c for _, c, _ in parts]))
        M = build_matrices(P, cl, poset(P, cl))
        ok &= kronecker_check([m for _, _, m in parts], M)
    report("criterion 9 Kronecker law", ok, time.perf_counter() - start)
