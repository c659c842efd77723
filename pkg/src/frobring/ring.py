"""Finite commutative rings given by addition and multiplication tables.

Every ring is stored as two dense ``size x size`` tables over the element
indices ``0..size-1``.  The constructors in this module expand the supported
specification formats (integers modulo m, presentations over a basis,
direct products, explicit tables) into such tables and check every ring
axiom exhaustively.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import SpecError, ValidationError


# --------------------------------------------------------------------------
# specifications


@dataclass(frozen=True)
class Modular:
    m: int


@dataclass(frozen=True)
class Presentation:
    """Free module over mixed moduli with a basis product table.

    ``products`` maps a basis index pair ``(i, j)`` with ``i <= j`` to the
    coordinate tuple of ``e_i * e_j``.  Basis element 0 is the identity and
    its products may be omitted.
    """

    basis: tuple[str, ...]
    moduli: tuple[int, ...]
    products: Mapping[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Tables:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int | None = None
    one: int | None = None
    labels: tuple[str, ...] | None = None


RingSpec = Modular | Presentation | Product | Tables


# --------------------------------------------------------------------------
# the ring


def _readonly(a):
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A validated finite commutative ring with identity.

    ``add`` and ``mul`` are read-only integer arrays; ``add[a, b]`` is the
    index of ``a + b``.  Build instances with :func:`build_ring`.
    """

    size: int
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    zero: int
    one: int
    labels: tuple[str, ...] = field(repr=False)
    name: str | None = None
    factors: tuple["FiniteRing", ...] = field(default=(), repr=False)
    _parser: Callable[[str], int] | None = field(default=None, repr=False)

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(int(u) for u in np.flatnonzero((self.mul == self.one).any(axis=1)))

    @cached_property
    def neg(self) -> np.ndarray:
        return _readonly(np.argmax(self.add == self.zero, axis=1))

    def principal_mask(self, a: int) -> int:
        """Bitset of the principal ideal aR."""
        return elements_to_mask(self.mul[a])

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, label: str | int) -> int:
        """Resolve an element label (or index) to its index."""
        if isinstance(label, (int, np.integer)):
            if not 0 <= label < self.size:
                raise SpecError(f"element index {label} out of range for ring of size {self.size}")
            return int(label)
        text = label.strip()
        try:
            return self.labels.index(text)
        except ValueError:
            pass
        if self._parser is not None:
            return self._parser(text)
        raise SpecError(f"unknown element label {label!r}")

    def digest(self) -> str:
        import hashlib

        h = hashlib.sha256()
        h.update(self.add.tobytes())
        h.update(self.mul.tobytes())
        return h.hexdigest()[:16]

    def __hash__(self):
        return id(self)


# --------------------------------------------------------------------------
# bitset helpers (ideals are int bitsets over element indices)


def elements_to_mask(elements) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << int(e)
    return mask


def mask_to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def ideal_sum(ring: FiniteRing, a: int, b: int) -> int:
    """Bitset of I + J for ideals given as bitsets."""
    ea = np.array(mask_to_elements(a), dtype=np.int64)
    eb = np.array(mask_to_elements(b), dtype=np.int64)
    return elements_to_mask(np.unique(ring.add[np.ix_(ea, eb)]))


def annihilator_mask(ring: FiniteRing, ideal: int) -> int:
    """Bitset of {r : r*i = 0 for all i in ideal}."""
    members = np.array(mask_to_elements(ideal), dtype=np.int64)
    ok = (ring.mul[:, members] == ring.zero).all(axis=1)
    return elements_to_mask(np.flatnonzero(ok))


def all_ideals(ring: FiniteRing) -> tuple[int, ...]:
    """Every ideal of the ring as a bitset, sorted by (size, bitset).

    Closure of the principal ideals under ideal sums; every ideal of a
    finite commutative ring is a finite sum of principal ideals.
    """
    principal = {ring.principal_mask(a) for a in range(ring.size)}
    ideals = set(principal)
    frontier = set(principal)
    while frontier:
        fresh = set()
        for i in frontier:
            for p in principal:
                s = ideal_sum(ring, i, p)
                if s not in ideals:
                    fresh.add(s)
        ideals |= fresh
        frontier = fresh
    return tuple(sorted(ideals, key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class FrobeniusReport:
    is_frobenius: bool
    witnesses: tuple[tuple[frozenset, frozenset, int], ...] = ()


def is_frobenius(ring: FiniteRing) -> FrobeniusReport:
    """Test |I| * |Ann(I)| == |R| over every ideal I."""
    witnesses = []
    for ideal in all_ideals(ring):
        ann = annihilator_mask(ring, ideal)
        p = ideal.bit_count() * ann.bit_count()
        if p != ring.size:
            witnesses.append(
                (frozenset(mask_to_elements(ideal)), frozenset(mask_to_elements(ann)), p)
            )
    return FrobeniusReport(not witnesses, tuple(witnesses))


# --------------------------------------------------------------------------
# validation


def _first(mask) -> tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(mask)[0])


def validate_tables(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    n = add.shape[0]
    for name, t in (("add", add), ("mul", mul)):
        if t.shape != (n, n):
            raise ValidationError("shape", (), f"{name} table must be {n}x{n}, got {t.shape}")
        bad = (t < 0) | (t >= n)
        if bad.any():
            a, b = _first(bad)
            raise ValidationError(f"{name} closure", (a, b), f"{name}[{a}][{b}] = {t[a, b]} is not an element")
    r = np.arange(n)
    checks = [
        ("additive commutativity", add != add.T),
        ("multiplicative commutativity", mul != mul.T),
    ]
    for axiom, bad in checks:
        if bad.any():
            raise ValidationError(axiom, _first(bad))
    if (add[zero] != r).any():
        raise ValidationError("additive identity", (zero, int(np.flatnonzero(add[zero] != r)[0])))
    if (mul[one] != r).any():
        raise ValidationError("multiplicative identity", (one, int(np.flatnonzero(mul[one] != r)[0])))
    no_inverse = ~(add == zero).any(axis=1)
    if no_inverse.any():
        raise ValidationError("additive inverse", (int(np.flatnonzero(no_inverse)[0]),))
    a, b, c = r[:, None, None], r[None, :, None], r[None, None, :]
    for axiom, t in (("additive associativity", add), ("multiplicative associativity", mul)):
        bad = t[t[a, b], c] != t[a, t[b, c]]
        if bad.any():
            raise ValidationError(axiom, _first(bad))
    bad = mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]
    if bad.any():
        raise ValidationError("distributivity", _first(bad))


def ring_from_tables(add, mul, zero=None, one=None, labels=None, name=None,
                     factors=(), parser=None) -> FiniteRing:
    try:
        add = _readonly(add)
        mul = _readonly(mul)
    except (ValueError, TypeError):
        raise SpecError("tables must be rectangular arrays of element indices") from None
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape[0] < 1:
        raise SpecError("addition table must be a non-empty square array")
    n = add.shape[0]
    if mul.shape != add.shape:
        raise SpecError(f"multiplication table shape {mul.shape} differs from addition table {add.shape}")
    r = np.arange(n)
    if zero is None:
        cand = np.flatnonzero((add == r[None, :]).all(axis=1))
        if not len(cand):
            raise ValidationError("additive identity", (), "no additive identity in table")
        zero = int(cand[0])
    if one is None:
        cand = np.flatnonzero((mul == r[None, :]).all(axis=1))
        if not len(cand):
            raise ValidationError("multiplicative identity", (), "no multiplicative identity in table")
        one = int(cand[0])
    for what, v in (("zero", zero), ("one", one)):
        if not 0 <= v < n:
            raise SpecError(f"{what} = {v} is not an element index")
    validate_tables(add, mul, zero, one)
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    labels = tuple(labels)
    if len(labels) != n:
        raise SpecError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise SpecError("element labels must be distinct")
    return FiniteRing(n, add, mul, int(zero), int(one), labels, name, tuple(factors), parser)


# --------------------------------------------------------------------------
# construction from specs


def _modular(m: int) -> FiniteRing:
    if not isinstance(m, int) or m < 2:
        raise SpecError(f"modulus must be an integer >= 2, got {m!r}")
    r = np.arange(m)
    add = (r[:, None] + r[None, :]) % m
    mul = (r[:, None] * r[None, :]) % m

    def parse(text):
        try:
            return int(text) % m
        except ValueError:
            raise SpecError(f"cannot parse {text!r} as an integer mod {m}") from None

    return ring_from_tables(add, mul, 0, 1 % m, name=f"Z{m}", parser=parse)


def presentation_label(basis: Sequence[str], coords: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(coords):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c) if basis[0] == "1" else (basis[0] if c == 1 else f"{c}{basis[0]}"))
        else:
            terms.append(basis[k] if c == 1 else f"{c}{basis[k]}")
    return "+".join(terms) if terms else "0"


def _presentation_parser(basis, moduli, index_of):
    names = sorted(((name, k) for k, name in enumerate(basis)), key=lambda p: -len(p[0]))

    def parse(text):
        text = text.replace(" ", "")
        if text.startswith("[") and text.endswith("]"):
            try:
                coords = [int(v) for v in text[1:-1].split(",")]
            except ValueError:
                raise SpecError(f"bad coordinate tuple {text!r}") from None
            if len(coords) != len(basis):
                raise SpecError(f"coordinate tuple {text!r} needs {len(basis)} entries")
        else:
            coords = [0] * len(basis)
            for term in text.split("+"):
                if not term:
                    raise SpecError(f"empty term in {text!r}")
                if term.isdigit():
                    coords[0] += int(term)
                    continue
                m = re.fullmatch(r"(\d*)\*?(.+)", term)
                coef, rest = m.group(1), m.group(2)
                for name, k in names:
                    if rest == name:
                        coords[k] += int(coef) if coef else 1
                        break
                else:
                    raise SpecError(f"unknown basis element in term {term!r} of {text!r}")
        return index_of(tuple(c % mod for c, mod in zip(coords, moduli)))

    return parse


def _presentation(spec: Presentation) -> FiniteRing:
    basis = tuple(spec.basis)
    moduli = tuple(spec.moduli)
    k = len(basis)
    if k < 1 or len(moduli) != k:
        raise SpecError("presentation needs one modulus per basis element")
    if any(not isinstance(m, int) or m < 2 for m in moduli):
        raise SpecError(f"moduli must be integers >= 2, got {moduli}")
    if len(set(basis)) != k:
        raise SpecError("basis names must be distinct")
    table = {}
    for (i, j), v in spec.products.items():
        key = f"{i}*{j}"
        if not (0 <= i <= j < k):
            raise SpecError(f"product key {key!r}: need basis indices 0 <= i <= j < {k}")
        v = tuple(v)
        if len(v) != k:
            raise SpecError(f"product {key!r} must have {k} coordinates")
        if any(not 0 <= c < m for c, m in zip(v, moduli)):
            raise SpecError(f"product {key!r} = {v} is not reduced mod {moduli}")
        table[i, j] = v
    for j in range(k):
        unit = tuple(int(x == j) for x in range(k))
        if table.setdefault((0, j), unit) != unit:
            raise SpecError(f"product key '0*{j}': basis element 0 must act as the identity")
    for i in range(1, k):
        for j in range(i, k):
            if (i, j) not in table:
                raise SpecError(f"missing product key '{i}*{j}'")

    coords = list(itertools.product(*(range(m) for m in moduli)))
    index = {c: n for n, c in enumerate(coords)}
    P = np.zeros((k, k, k), dtype=np.int64)
    for (i, j), v in table.items():
        P[i, j] = P[j, i] = v
    C = np.array(coords, dtype=np.int64)
    mods = np.array(moduli, dtype=np.int64)
    radix = np.array([prod(moduli[t + 1:]) for t in range(k)], dtype=np.int64)
    add = ((C[:, None, :] + C[None, :, :]) % mods) @ radix
    # (a*b)_t = sum_ij a_i b_j P[i,j,t]
    prodc = np.einsum("ai,bj,ijt->abt", C, C, P) % mods
    mul = prodc @ radix
    labels = tuple(presentation_label(basis, c) for c in coords)
    parser = _presentation_parser(basis, moduli, lambda c: index[c])
    return ring_from_tables(add, mul, index[(0,) * k], index[(1 % moduli[0],) + (0,) * (k - 1)],
                            labels=labels, parser=parser)


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def direct_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product ring, elements indexed lexicographically."""
    factors = tuple(factors)
    if not factors:
        raise SpecError("product needs at least one factor")
    sizes = [f.size for f in factors]
    tuples = list(itertools.product(*(range(s) for s in sizes)))
    T = np.array(tuples, dtype=np.int64)
    radix = np.array([prod(sizes[t + 1:]) for t in range(len(sizes))], dtype=np.int64)
    add_cols = [f.add[T[:, None, k], T[None, :, k]] for k, f in enumerate(factors)]
    mul_cols = [f.mul[T[:, None, k], T[None, :, k]] for k, f in enumerate(factors)]
    add = np.stack(add_cols, axis=-1) @ radix
    mul = np.stack(mul_cols, axis=-1) @ radix
    labels = tuple("(" + ",".join(f.labels[x] for f, x in zip(factors, t)) + ")" for t in tuples)

    def parse(text):
        inner = text.strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise SpecError(f"product element {text!r} must be written (a,b,...)")
        parts = _split_top(inner[1:-1])
        if len(parts) != len(factors):
            raise SpecError(f"product element {text!r} needs {len(factors)} components")
        idx = [f.element(p) for f, p in zip(factors, parts)]
        return int(np.dot(idx, radix))

    zero = int(np.dot([f.zero for f in factors], radix))
    one = int(np.dot([f.one for f in factors], radix))
    name = " x ".join(f.name or "?" for f in factors)
    return ring_from_tables(add, mul, zero, one, labels=labels, name=name,
                            factors=factors, parser=parse)


def build_ring(spec: RingSpec, name: str | None = None) -> FiniteRing:
    """Expand a ring specification into a validated :class:`FiniteRing`."""
    if isinstance(spec, Modular):
        ring = _modular(spec.m)
    elif isinstance(spec, Presentation):
        ring = _presentation(spec)
    elif isinstance(spec, Product):
        ring = direct_product([build_ring(f) for f in spec.factors])
    elif isinstance(spec, Tables):
        ring = ring_from_tables(spec.add, spec.mul, spec.zero, spec.one, spec.labels)
    else:
        raise SpecError(f"unsupported ring specification {spec!r}")
    if name is not None:
        object.__setattr__(ring, "name", name)
    return ring
