"""Apply MacWilliams transforms to enumerators and check dual identities."""

from __future__ import annotations

import itertools
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .codes import DEFAULT_CAP, LinearCode, dual
from .enumerators import sse, swe, tuple_sse, tuple_swe
from .errors import DimensionError, PreconditionError
from .ideals import ClassData, associate_classes, poset
from .linalg import Matrix, normalize
from .poly import SSE, SWE, Enumerator, Poly, hamming
from .ring import FiniteRing, is_frobenius
from .transform import build_matrices

KINDS = ("swe", "sse", "hamming", "tuple_swe", "tuple_sse")


def _check_square(M: Matrix, t: int) -> None:
    if len(M) != t + 1 or any(len(row) != t + 1 for row in M):
        raise DimensionError(f"transform matrix must be {t + 1}x{t + 1}")


def _linear_power_table(M: Matrix, t: int, n: int):
    """powers[i][e]: (sum_j M[i][j] x_j)^e as {composition: coefficient}."""
    rows = []
    for i in range(t + 1):
        unit = {tuple(int(k == j) for k in range(t + 1)): M[i][j] for j in range(t + 1) if M[i][j]}
        table = [{(0,) * (t + 1): 1}]
        for _ in range(n):
            nxt = defaultdict(int)
            for e1, c1 in table[-1].items():
                for e2, c2 in unit.items():
                    nxt[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
            table.append(dict(nxt))
        rows.append(table)
    return rows


def transform_swe(enum: Enumerator, M: Matrix, scale=1) -> Enumerator:
    """scale * enum(M x), substituting x_i -> sum_j M[i][j] x_j."""
    if enum.alphabet != SWE:
        raise DimensionError("transform_swe needs an swe enumerator")
    t, n = enum.t, enum.n
    _check_square(M, t)
    powers = _linear_power_table(M, t, n)
    out = defaultdict(int)
    for key, coef in enum.terms.items():
        acc = {(0,) * (t + 1): coef}
        for i, e in enumerate(key):
            if not e:
                continue
            nxt = defaultdict(int)
            for e1, c1 in acc.items():
                for e2, c2 in powers[i][e].items():
                    nxt[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
            acc = nxt
        for k, c in acc.items():
            out[k] += c
    scale = Fraction(scale)
    return Enumerator(SWE, t, n, {k: normalize(c * scale) for k, c in out.items()})


def transform_sse(enum: Enumerator, M: Matrix, scale=1) -> Enumerator:
    """scale * enum(M X), substituting x_{i,l} -> sum_j M[i][j] x_{j,l} per coordinate."""
    if enum.alphabet != SSE:
        raise DimensionError("transform_sse needs an sse enumerator")
    t = enum.t
    _check_square(M, t)
    support = [[(j, M[i][j]) for j in range(t + 1) if M[i][j]] for i in range(t + 1)]
    out = defaultdict(int)
    for key, coef in enum.terms.items():
        for choice in itertools.product(*(support[i] for i in key)):
            c = coef
            for _, m in choice:
                c *= m
            out[tuple(j for j, _ in choice)] += c
    scale = Fraction(scale)
    return Enumerator(SSE, t, enum.n, {k: normalize(c * scale) for k, c in out.items()})


@dataclass
class VerifyReport:
    identity: str
    left: Enumerator | Poly
    right: Enumerator | Poly
    equal: bool
    frobenius: bool = True
    context: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "equal": self.equal,
            "frobenius": self.frobenius,
            "left": str(self.left),
            "right": str(self.right),
            "context": self.context,
        }

    def __str__(self):
        status = "PASS" if self.equal else "FAIL"
        lines = [f"{status} {self.identity}"]
        if not self.frobenius:
            lines.append("  warning: ring is not Frobenius; the identity need not hold")
        lines.append(f"  left : {self.left}")
        lines.append(f"  right: {self.right}")
        return "\n".join(lines)


def verify_identity(kind: str, code: LinearCode, lam: int = 1, classes: ClassData | None = None,
                    cap: int = DEFAULT_CAP) -> VerifyReport:
    """Compare an enumerator of C^perp with the transform of C's enumerator.

    The dual is found by brute force; the left side is computed from it
    directly and the right side from C through Q D^lam A^-1.
    """
    kind = kind.replace("-", "_")
    if kind not in KINDS:
        raise ValueError(f"unknown identity kind {kind!r}; choose from {', '.join(KINDS)}")
    ring = code.ring
    classes = classes or associate_classes(ring)
    po = poset(ring, classes)
    frob = is_frobenius(ring).is_frobenius
    if not frob:
        warnings.warn(f"ring {ring.name or ring.digest()} is not Frobenius", stacklevel=2)
    tuple_kind = kind.startswith("tuple")
    if tuple_kind and not po.is_pir:
        raise PreconditionError("tuple enumerator identities require a principal ideal ring")
    if not tuple_kind:
        lam = 1
    mats = build_matrices(ring, classes, po)
    d = dual(code, cap)
    scale = Fraction(1, code.size ** lam)
    S = mats.S_lambda(lam)

    if kind == "swe":
        left, right = swe(d, classes), transform_swe(swe(code, classes), S, scale)
        name = "swe_{C^perp}(x) = 1/|C| swe_C(S x)"
    elif kind == "sse":
        left, right = sse(d, classes), transform_sse(sse(code, classes), S, scale)
        name = "sse_{C^perp}(X) = 1/|C| sse_C(S X)"
    elif kind == "tuple_sse":
        left = tuple_sse(d, classes, lam, cap)
        right = transform_sse(tuple_sse(code, classes, lam, cap), S, scale)
        name = f"sse^[{lam}]_{{C^perp}}(X) = 1/|C|^{lam} sse^[{lam}]_C(S^[{lam}] X)"
    elif kind == "tuple_swe":
        left = tuple_swe(d, classes, lam, cap)
        right = transform_swe(tuple_swe(code, classes, lam, cap), S, scale)
        name = f"swe^[{lam}]_{{C^perp}}(x) = 1/|C|^{lam} swe^[{lam}]_C(S^[{lam}] x)"
    else:
        zero_class = classes.class_of[ring.zero]
        left = hamming(swe(d, classes), zero_class)
        w = hamming(swe(code, classes), zero_class)
        xy = w.variables
        x, y = Poly.var("x", xy), Poly.var("y", xy)
        right = w.substitute({"x": x + (ring.size - 1) * y, "y": x - y}, xy) * scale
        name = "W_{C^perp}(x,y) = 1/|C| W_C(x+(|R|-1)y, x-y)"

    context = {
        "ring": ring.name,
        "ring_digest": ring.digest(),
        "generators": [[ring.label(x) for x in row] for row in code.generators],
        "lambda": lam,
        "order": [ring.label(a) for a in classes.reps],
        "code_size": code.size,
        "dual_size": d.size,
    }
    return VerifyReport(name, left, right, left == right, frob, context)


# --------------------------------------------------------------------------
# Lee weights over F2 + uF2 + vF2


LEE_CLASS_MONOMIALS = {"0": (3, 0), "u": (1, 2), "v": (0, 3), "1+v": (1, 2), "u+v": (2, 1), "1": (2, 1)}
"""Lee specialization of swe over F2+uF2+vF2, keyed by class representative: (x-exp, y-exp)."""

SLWE_CLASS_VARIABLE = {"0": 0, "u": 2, "v": 3, "1+v": 2, "u+v": 1, "1": 1}
"""Symmetrized Lee variable index for each class of F2+uF2+vF2."""

LEE_ORDER = ("0", "u", "v", "1+v", "u+v", "1")


def _class_lookup(ring: FiniteRing, classes: ClassData, table: dict) -> list:
    out = []
    for rep in classes.reps:
        hits = [table[k] for k in table if ring.element(k) in classes.members[classes.class_of[rep]]]
        if len(hits) != 1:
            raise PreconditionError("classes do not match the F2+uF2+vF2 Lee table")
        out.append(hits[0])
    return out


def lee_vector(ring: FiniteRing, classes: ClassData) -> list[Poly]:
    """Per-class monomials x^a y^b with Lee_C(x,y) = swe_C(vector)."""
    xy = ("x", "y")
    return [Poly(xy, {e: 1}) for e in _class_lookup(ring, classes, LEE_CLASS_MONOMIALS)]


def slwe_vector(ring: FiniteRing, classes: ClassData) -> list[Poly]:
    v = tuple(f"x{i}" for i in range(4))
    return [Poly.var(v[k], v) for k in _class_lookup(ring, classes, SLWE_CLASS_VARIABLE)]


def lee_enumerator(code: LinearCode, classes: ClassData) -> Poly:
    vec = lee_vector(code.ring, classes)
    e = swe(code, classes)
    return e.to_poly().substitute(dict(zip(e.variables, vec)), ("x", "y"))


def slwe_enumerator(code: LinearCode, classes: ClassData) -> Poly:
    vec = slwe_vector(code.ring, classes)
    e = swe(code, classes)
    return e.to_poly().substitute(dict(zip(e.variables, vec)), vec[0].variables)


def transformed_vector(S: Matrix, vector: Sequence[Poly]) -> list[Poly]:
    """The linear forms S . vector."""
    return [sum((c * v for c, v in zip(row, vector) if c), Poly(vector[0].variables)) for row in S]


def verify_lee(code: LinearCode, classes: ClassData) -> VerifyReport:
    """Lee_{C^perp}(x,y) = 1/|C| Lee_C(x+y, x-y), dual found by brute force."""
    d = dual(code)
    left = lee_enumerator(d, classes)
    lee = lee_enumerator(code, classes)
    xy = ("x", "y")
    x, y = Poly.var("x", xy), Poly.var("y", xy)
    right = lee.substitute({"x": x + y, "y": x - y}, xy) * Fraction(1, code.size)
    return VerifyReport("Lee_{C^perp}(x,y) = 1/|C| Lee_C(x+y, x-y)", left, right, left == right)


SLWE_IMAGE = (
    (1, 3, 3, 1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
    (1, -3, 3, -1),
)
"""Coefficient rows of the four linear forms substituted into slwe_C."""


def verify_slwe(code: LinearCode, classes: ClassData) -> VerifyReport:
    """slwe_{C^perp} = 1/|C| slwe_C(x0+3x1+3x2+x3, x0+x1-x2-x3, x0-x1-x2+x3, x0-3x1+3x2-x3)."""
    d = dual(code)
    left = slwe_enumerator(d, classes)
    s = slwe_enumerator(code, classes)
    v = s.variables
    forms = {name: Poly.linear(row, v) for name, row in zip(v, SLWE_IMAGE)}
    right = s.substitute(forms, v) * Fraction(1, code.size)
    return VerifyReport("slwe_{C^perp} = 1/|C| slwe_C(...)", left, right, left == right)
