import itertools
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

import brute
from frobring.catalog import CATALOG, FROBENIUS_RINGS, builtin
from frobring.errors import SpecError, ValidationError
from frobring.ring import (Modular, Presentation, Product, Tables, all_ideals, build_ring,
                           is_frobenius, mask_to_elements, ring_from_tables)


def test_modular_six_units():
    R = build_ring(Modular(6))
    assert R.size == 6
    assert set(R.units) == {1, 5}


@pytest.mark.parametrize("m", [2, 3, 4, 6, 8, 9, 12, 15])
def test_modular_units_are_coprime_residues(m):
    R = build_ring(Modular(m))
    assert set(R.units) == {u for u in range(m) if gcd(u, m) == 1}


def test_f2_uv_semi_presentation_relations():
    R = builtin("F2+uF2+vF2")
    assert R.size == 8
    u, v, one, zero = (R.element(x) for x in ("u", "v", "1", "0"))
    assert R.mul[u, u] == zero
    assert R.mul[v, v] == v
    assert R.mul[u, v] == zero
    assert R.one == one


def test_z4x_presentation_relations():
    R = builtin("Z4[x]/<x^3-2,2x>")
    assert R.size == 16
    x, x2, two, zero = (R.element(s) for s in ("x", "x^2", "2", "0"))
    assert R.mul[x, x] == x2
    assert R.mul[x, x2] == two
    assert R.add[x, x] == zero
    assert R.mul[x2, x2] == zero


def test_presentation_label_parsing_variants():
    R = builtin("F2+uF2+vF2")
    assert R.element("1+0u+1v") == R.element("1+v") == R.element("[1,0,1]")
    Z = builtin("Z4[x]/<x^3-2,2x>")
    assert Z.element("3x") == Z.element("x")
    # the x^2 coordinate is taken mod 2
    assert Z.element("2*x^2+3") == Z.element("3")
    assert Z.label(Z.element("x^2+3")) == "3+x^2"


def test_noncommutative_tables_rejected():
    # a 2-element "ring" whose multiplication is not commutative
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [1, 1]]
    with pytest.raises(ValidationError):
        ring_from_tables(add, mul, zero=0, one=1)


def test_nonassociative_tables_report_triple():
    add = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises(ValidationError) as err:
        ring_from_tables(add, mul)
    assert len(err.value.triple) == 3
    a, b, c = err.value.triple
    A, M = np.array(add), np.array(mul)
    assert M[a, A[b, c]] != A[M[a, b], M[a, c]]


def test_ragged_tables_are_spec_errors():
    with pytest.raises(SpecError):
        ring_from_tables([[0, 1], [1]], [[0, 0], [0, 1]])


def test_presentation_missing_product_key():
    with pytest.raises(SpecError, match="1\\*2"):
        build_ring(Presentation(("1", "u", "v"), (2, 2, 2), {(1, 1): (0, 0, 0), (2, 2): (0, 0, 0)}))


def test_presentation_unreduced_product():
    with pytest.raises(SpecError, match="1\\*1"):
        build_ring(Presentation(("1", "u"), (2, 2), {(1, 1): (0, 2)}))


def test_presentation_inconsistent_structure_constants_caught():
    # u^2 = u over Z4 x Z2 coordinates does not give a well-defined ring
    with pytest.raises(ValidationError):
        build_ring(Presentation(("1", "u"), (4, 2), {(1, 1): (1, 0)}))


def test_frobenius_examples():
    assert is_frobenius(build_ring(Modular(12))).is_frobenius
    assert is_frobenius(builtin("F2[u,v]/<u^2,v^2>")).is_frobenius


def test_non_frobenius_witness():
    R = builtin("F2[u,v]/<u^2,uv,v^2>")
    rep = is_frobenius(R)
    assert not rep.is_frobenius
    I = frozenset(R.element(x) for x in ("0", "u", "v", "u+v"))
    assert (I, I, 16) in rep.witnesses


@pytest.mark.parametrize("name", list(CATALOG))
def test_frobenius_flag_matches_brute_force(name):
    R = builtin(name)
    expect = all(len(I) * len(brute.annihilator(R, I)) == R.size for I in brute.all_ideals(R))
    rep = is_frobenius(R)
    assert rep.is_frobenius == expect
    assert rep.is_frobenius == (not rep.witnesses)
    assert rep.is_frobenius == (name in FROBENIUS_RINGS or name in ("Z2xZ3", "Z2xZ2"))


@pytest.mark.parametrize("name", list(CATALOG))
def test_all_ideals_match_brute_force(name):
    R = builtin(name)
    got = {frozenset(mask_to_elements(m)) for m in all_ideals(R)}
    assert got == brute.all_ideals(R)


@pytest.mark.parametrize("name", list(CATALOG))
def test_ring_axioms_exhaustive(name):
    R = builtin(name)
    add, mul = brute.tables(R)
    for a, b, c in itertools.product(range(R.size), repeat=3):
        assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
        assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
    assert all(mul[a][b] == mul[b][a] for a in range(R.size) for b in range(R.size))


@given(st.sampled_from([2, 3, 4, 5, 6]), st.sampled_from([2, 3, 4]))
def test_product_size_and_units(m1, m2):
    P = build_ring(Product((Modular(m1), Modular(m2))))
    assert P.size == m1 * m2
    expect = {a * m2 + b for a in range(m1) for b in range(m2) if gcd(a, m1) == 1 and gcd(b, m2) == 1}
    assert set(P.units) == expect
    assert set(P.units) == brute.units(P)


def test_product_labels_and_parser():
    P = builtin("Z2xZ3")
    assert P.labels[0] == "(0,0)"
    assert P.element("(1,2)") == 5
    with pytest.raises(SpecError):
        P.element("(1,2,0)")


def test_tables_spec_roundtrip():
    R = build_ring(Modular(4))
    T = build_ring(Tables(tuple(map(tuple, R.add.tolist())), tuple(map(tuple, R.mul.tolist()))))
    assert T.zero == 0 and T.one == 1
    assert T.digest() == R.digest()


def test_unknown_label():
    with pytest.raises(SpecError):
        build_ring(Modular(6)).element("seven")
