"""Exact sparse multivariate polynomials and weight-enumerator containers."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import AssignmentError, DimensionError
from .linalg import normalize


def _fmt_coef(c) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _join_terms(parts: Iterable[tuple[object, str]]) -> str:
    """Render (coefficient, monomial) pairs as ``2*x0^2 - x1 + 1/3``."""
    out = []
    for coef, mono in parts:
        neg = coef < 0
        mag = -coef if neg else coef
        if not mono:
            body = _fmt_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coef(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


class Poly:
    """Sparse polynomial over the rationals in a fixed tuple of variables.

    ``terms`` maps exponent tuples to nonzero coefficients (int where
    integral, otherwise Fraction).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise DimensionError(f"exponent tuple {exps} does not match {len(self.variables)} variables")
            c = normalize(Fraction(c)) if not isinstance(c, int) else c
            if c != 0:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "Poly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise AssignmentError(f"unknown variable {name!r}")
        k = variables.index(name)
        return cls(variables, {tuple(int(i == k) for i in range(len(variables))): 1})

    @classmethod
    def linear(cls, coefs: Sequence, variables: Sequence[str]) -> "Poly":
        n = len(variables)
        return cls(variables, {tuple(int(i == k) for i in range(n)): c for k, c in enumerate(coefs) if c})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise DimensionError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Rational)):
            return Poly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Poly):
            return Poly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Poly(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Poly):
            other = Poly.constant(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def monomial(self, exps) -> str:
        parts = []
        for v, e in zip(self.variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        keys = sorted(self.terms, reverse=True)
        return _join_terms((self.terms[e], self.monomial(e)) for e in keys)

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), 0)

    def coefficient_sum(self):
        return normalize(sum((Fraction(c) for c in self.terms.values()), Fraction(0)))

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def substitute(self, mapping: Mapping[str, "Poly | int | Fraction"], variables: Sequence[str] | None = None) -> "Poly":
        """Replace each variable by a polynomial in ``variables``."""
        missing = [v for v in self.variables if v not in mapping]
        if missing:
            raise AssignmentError(f"no assignment for variable(s) {', '.join(missing)}")
        if variables is None:
            sample = next((p for p in mapping.values() if isinstance(p, Poly)), None)
            variables = sample.variables if sample is not None else ()
        images = []
        for v in self.variables:
            img = mapping[v]
            images.append(img if isinstance(img, Poly) else Poly.constant(img, variables))
        cache: dict[tuple[int, int], Poly] = {}

        def power(k, e):
            if (k, e) not in cache:
                cache[k, e] = images[k] ** e
            return cache[k, e]

        out = Poly(variables)
        for exps, c in self.terms.items():
            term = Poly.constant(c, variables)
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            out = out + term
        return out

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(e), "coefficient": _fmt_coef(self.terms[e])}
                for e in sorted(self.terms, reverse=True)
            ],
        }


# --------------------------------------------------------------------------
# enumerators


SWE = "swe"
SSE = "sse"


def swe_variables(t: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(t + 1))


def sse_variables(t: int, n: int) -> tuple[str, ...]:
    return tuple(f"x{i}_{l}" for i in range(t + 1) for l in range(1, n + 1))


@dataclass(frozen=True)
class Enumerator:
    """A weight/support enumerator in compact form.

    In the ``swe`` alphabet a key is the composition (e_0..e_t) counting
    coordinates per class.  In the ``sse`` alphabet a key assigns one class
    index to each of the n coordinates and stands for the monomial
    prod_l x_{key[l], l}.
    """

    alphabet: str
    t: int
    n: int
    terms: Mapping[tuple[int, ...], object]

    def __post_init__(self):
        if self.alphabet not in (SWE, SSE):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        clean = {}
        for key, c in self.terms.items():
            key = tuple(int(k) for k in key)
            if self.alphabet == SWE:
                if len(key) != self.t + 1 or sum(key) != self.n:
                    raise DimensionError(f"swe key {key} is not a composition of {self.n} into {self.t + 1} parts")
            elif len(key) != self.n or any(not 0 <= k <= self.t for k in key):
                raise DimensionError(f"sse key {key} must pick a class in 0..{self.t} for each of {self.n} coordinates")
            c = normalize(c) if isinstance(c, Fraction) else c
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    @property
    def variables(self) -> tuple[str, ...]:
        return swe_variables(self.t) if self.alphabet == SWE else sse_variables(self.t, self.n)

    def to_poly(self) -> Poly:
        if self.alphabet == SWE:
            return Poly(self.variables, self.terms)
        width = self.t + 1
        out = {}
        for key, c in self.terms.items():
            exps = [0] * (width * self.n)
            for l, i in enumerate(key):
                exps[i * self.n + l] = 1
            out[tuple(exps)] = c
        return Poly(self.variables, out)

    def keys_sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, reverse=self.alphabet == SWE)

    def monomial(self, key) -> str:
        if self.alphabet == SWE:
            return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(key) if e)
        factors = sorted((i, l + 1) for l, i in enumerate(key))
        return "*".join(f"x{i}_{l}" for i, l in factors)

    def __str__(self):
        return _join_terms((self.terms[k], self.monomial(k)) for k in self.keys_sorted())

    def coefficient(self, key) -> object:
        return self.terms.get(tuple(key), 0)

    def coefficient_sum(self):
        return normalize(sum((Fraction(c) for c in self.terms.values()), Fraction(0)))

    def scaled(self, factor) -> "Enumerator":
        return Enumerator(self.alphabet, self.t, self.n,
                          {k: normalize(Fraction(c) * Fraction(factor)) for k, c in self.terms.items()})

    def collapse(self) -> "Enumerator":
        """Set x_{i,l} = x_i for every coordinate l (sse -> swe)."""
        if self.alphabet == SWE:
            return self
        out = defaultdict(int)
        for key, c in self.terms.items():
            comp = [0] * (self.t + 1)
            for i in key:
                comp[i] += 1
            out[tuple(comp)] += c
        return Enumerator(SWE, self.t, self.n, out)

    def to_json(self) -> dict:
        keyname = "exponents" if self.alphabet == SWE else "classes"
        return {
            "alphabet": self.alphabet,
            "t": self.t,
            "n": self.n,
            "text": str(self),
            "terms": [{keyname: list(k), "coefficient": _fmt_coef(self.terms[k])} for k in self.keys_sorted()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Enumerator":
        keyname = "exponents" if data["alphabet"] == SWE else "classes"
        return cls(data["alphabet"], int(data["t"]), int(data["n"]),
                   {tuple(term[keyname]): normalize(Fraction(term["coefficient"])) for term in data["terms"]})


def specialize(enum: Enumerator | Poly, assignment: Mapping[str, object],
               variables: Sequence[str] | None = None) -> Poly:
    """Substitute a polynomial (or constant) for every variable of ``enum``."""
    poly = enum.to_poly() if isinstance(enum, Enumerator) else enum
    return poly.substitute(assignment, variables)


def hamming(enum: Enumerator, zero_class: int = 0) -> Poly:
    """W(x, y): the class of zero goes to x, every other class to y."""
    swe = enum.collapse()
    xy = ("x", "y")
    x, y = Poly.var("x", xy), Poly.var("y", xy)
    return specialize(swe, {v: (x if i == zero_class else y) for i, v in enumerate(swe.variables)}, xy)
