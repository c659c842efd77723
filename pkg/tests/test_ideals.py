import pytest
from hypothesis import given, strategies as st

import brute
from frobring.catalog import CATALOG, FROBENIUS_RINGS, PIR_RINGS, builtin, paper_order
from frobring.errors import OrderError, StructureError
from frobring.ideals import annihilator, associate_classes, mobius_matrix, poset, zeta_matrix
from frobring.linalg import identity, matmul
from frobring.ring import Modular, build_ring, mask_to_elements

Z12_A = (
    (1, 1, 1, 1, 1, 1),
    (0, 1, 0, 1, 1, 1),
    (0, 0, 1, 0, 1, 1),
    (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 1),
)

F2UV_SQUARES_A = (
    (1, 1, 1, 1, 1, 1),
    (0, 1, 0, 0, 0, 0),
    (0, 1, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (0, 1, 1, 1, 1, 1),
)


def _setup(name, order=True):
    R = builtin(name)
    cl = associate_classes(R, paper_order(name, R) if order else None)
    return R, cl, poset(R, cl)


def test_z12_default_order_and_sizes():
    R = build_ring(Modular(12))
    cl = associate_classes(R)
    assert cl.reps == (0, 6, 4, 3, 2, 1)
    assert cl.ideal_size == (1, 2, 3, 4, 6, 12)


def test_z12_class_members():
    R = build_ring(Modular(12))
    cl = associate_classes(R)
    assert set(cl.members[cl.class_of[2]]) == {2, 10}
    assert set(cl.members[cl.class_of[3]]) == {3, 9}
    assert set(cl.members[cl.class_of[1]]) == {1, 5, 7, 11}


def test_z6_classes():
    cl = associate_classes(build_ring(Modular(6)))
    assert cl.reps == (0, 3, 2, 1)
    assert cl.ideal_size == (1, 2, 3, 6)


@pytest.mark.parametrize("name", list(CATALOG))
def test_classes_are_unit_orbits(name):
    R = builtin(name)
    cl = associate_classes(R)
    U = brute.units(R)
    mul = brute.tables(R)[1]
    for r in range(R.size):
        orbit = {mul[r][u] for u in U}
        assert set(cl.members[cl.class_of[r]]) == orbit
        for s in range(R.size):
            same = cl.class_of[r] == cl.class_of[s]
            assert same == (brute.principal(R, r) == brute.principal(R, s))
    assert cl.reps[0] == R.zero and cl.ideal_size[0] == 1
    assert cl.ideal_size[-1] == R.size
    assert len(set(cl.ideal)) == len(cl.reps)


def test_rep_order_errors():
    R = build_ring(Modular(6))
    with pytest.raises(OrderError):
        associate_classes(R, (0, 3, 2))
    with pytest.raises(OrderError):
        associate_classes(R, (0, 3, 3, 1))
    with pytest.raises(OrderError):
        associate_classes(R, (0, 3, 2, 1, 5))


def test_rep_order_accepts_any_member():
    R = build_ring(Modular(6))
    cl = associate_classes(R, (0, 3, 4, 5))
    assert cl.reps == (0, 3, 4, 5)
    assert cl.ideal_size == (1, 2, 3, 6)


def test_annihilator_examples():
    R = build_ring(Modular(6))
    assert annihilator(R, 2) == frozenset({0, 3})
    assert annihilator(R, 0) == frozenset(range(6))
    assert annihilator(R, 1) == frozenset({0})


def test_z12_hasse_covers():
    R, cl, po = _setup("Z12")
    assert set(po.covers()) == {(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)}


def test_f2uv_squares_not_pir():
    R, cl, po = _setup("F2[u,v]/<u^2,v^2>")
    assert not po.is_pir
    target = frozenset(R.element(x) for x in ("0", "u", "v", "u+v", "uv", "u+uv", "v+uv", "u+v+uv"))
    ideals = {frozenset(mask_to_elements(m)) for m in po.all_ideals}
    assert target in ideals
    assert target not in set(cl.ideal)
    uR, vR = brute.principal(R, R.element("u")), brute.principal(R, R.element("v"))
    add = brute.tables(R)[0]
    assert frozenset(add[a][b] for a in uR for b in vR) == target


def test_z6_ann_class():
    R, cl, po = _setup("Z6")
    assert tuple(po.ann_class) == (3, 2, 1, 0)


def test_zeta_examples():
    assert zeta_matrix(_setup("Z12")[2]) == Z12_A
    assert zeta_matrix(_setup("F2[u,v]/<u^2,v^2>")[2]) == F2UV_SQUARES_A


@pytest.mark.parametrize("name", list(CATALOG))
def test_zeta_and_mobius_laws(name):
    R, cl, po = _setup(name, order=False)
    A = zeta_matrix(po)
    t = len(A) - 1
    assert all(A[i][i] == 1 for i in range(t + 1))
    assert all(A[0][j] == 1 for j in range(t + 1))
    assert all(A[i][t] == 1 for i in range(t + 1))
    Ai = mobius_matrix(A)
    assert matmul(A, Ai) == identity(t + 1)
    assert [Ai[k][0] for k in range(t + 1)] == [1] + [0] * t
    assert [sum(row) for row in Ai] == [0] * t + [1]


@pytest.mark.parametrize("name", list(CATALOG))
def test_poset_is_partial_order(name):
    R, cl, po = _setup(name, order=False)
    n = len(cl.reps)
    L = po.leq
    for i in range(n):
        assert L[i][i]
        assert L[0][i] and L[i][n - 1]
        for j in range(n):
            if i != j:
                assert not (L[i][j] and L[j][i])
            for k in range(n):
                if L[i][j] and L[j][k]:
                    assert L[i][k]


def _reverses(name):
    R, cl, po = _setup(name, order=False)
    anns = [brute.annihilator(R, I) for I in cl.ideal]
    n = len(cl.reps)
    return all((cl.ideal[i] <= cl.ideal[j]) == (anns[j] <= anns[i]) for i in range(n) for j in range(n))


@pytest.mark.parametrize("name", FROBENIUS_RINGS + ("Z2xZ3", "Z2xZ2"))
def test_inclusion_reverses_under_annihilator(name):
    assert _reverses(name)


def test_inclusion_reversal_breaks_without_frobenius():
    # uR and vR have the same annihilator {0,u,v,u+v} but are not nested
    assert not _reverses("F2[u,v]/<u^2,uv,v^2>")


@pytest.mark.parametrize("name", FROBENIUS_RINGS)
def test_double_annihilator(name):
    R, cl, po = _setup(name, order=False)
    for I in cl.ideal:
        assert brute.annihilator(R, brute.annihilator(R, I)) == I


@pytest.mark.parametrize("name", PIR_RINGS)
def test_pir_annihilator_involution(name):
    R, cl, po = _setup(name, order=False)
    phi = po.ann_class
    assert all(p is not None for p in phi)
    assert all(phi[phi[i]] == i for i in range(len(phi)))
    assert sum(1 for i in range(len(phi)) if phi[i] == i) <= 1
    assert {brute.annihilator(R, I) for I in cl.ideal} == set(cl.ideal)


@pytest.mark.parametrize("name", list(CATALOG))
def test_is_pir_matches_brute_force(name):
    R, cl, po = _setup(name, order=False)
    assert po.is_pir == (brute.all_ideals(R) <= set(cl.ideal))


def test_mobius_rejects_cycle():
    with pytest.raises(StructureError):
        mobius_matrix(((1, 1), (1, 1)))


@given(st.integers(2, 40))
def test_modular_mobius_is_exact_inverse(m):
    R = build_ring(Modular(m))
    cl = associate_classes(R)
    A = zeta_matrix(poset(R, cl))
    assert mobius_matrix(A) == tuple(tuple(r) for r in brute.inverse(A))
