"""Reading ring-spec JSON files, generator-matrix files and order strings.

Ring-spec JSON, one of::

    {"kind": "modular", "m": 6}
    {"kind": "presentation", "basis": ["1", "u", "v"], "moduli": [2, 2, 2],
     "products": {"1*1": [0, 0, 0], "1*2": [0, 0, 0], "2*2": [0, 0, 1]}}
    {"kind": "product", "factors": [<ring spec>, ...]}
    {"kind": "tables", "add": [[...]], "mul": [[...]], "zero": 0, "one": 1,
     "labels": ["0", "1", ...]}

Every kind also accepts an optional ``"name"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import SpecError
from .ring import FiniteRing, Modular, Presentation, Product, Tables, _split_top, build_ring

KINDS = ("modular", "presentation", "product", "tables")


def _require(doc: Mapping, key: str, where: str):
    if key not in doc:
        raise SpecError(f"{where}: missing key {key!r}")
    return doc[key]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise SpecError(f"{where}: expected a list of integers")
    return tuple(_int(v, f"{where}[{i}]") for i, v in enumerate(value))


def _table(value, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or not value:
        raise SpecError(f"{where}: expected a non-empty list of rows")
    rows = tuple(_int_list(row, f"{where}[{i}]") for i, row in enumerate(value))
    if any(len(r) != len(rows) for r in rows):
        raise SpecError(f"{where}: table must be square ({len(rows)} rows)")
    return rows


def spec_from_json(doc: Any, where: str = "ring"):
    """Turn a parsed JSON document into a ring spec; errors name the offending key."""
    if not isinstance(doc, dict):
        raise SpecError(f"{where}: expected a JSON object")
    kind = _require(doc, "kind", where)
    if kind not in KINDS:
        raise SpecError(f"{where}.kind: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind == "modular":
        return Modular(_int(_require(doc, "m", where), f"{where}.m"))
    if kind == "presentation":
        basis = _require(doc, "basis", where)
        if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
            raise SpecError(f"{where}.basis: expected a list of strings")
        moduli = _int_list(_require(doc, "moduli", where), f"{where}.moduli")
        raw = _require(doc, "products", where)
        if not isinstance(raw, dict):
            raise SpecError(f"{where}.products: expected an object keyed 'i*j'")
        products = {}
        for key, value in raw.items():
            parts = key.split("*")
            try:
                i, j = (int(p) for p in parts)
            except ValueError:
                raise SpecError(f"{where}.products: bad key {key!r}, expected 'i*j'") from None
            if i > j:
                i, j = j, i
            if (i, j) in products:
                raise SpecError(f"{where}.products: duplicate key {key!r}")
            products[i, j] = _int_list(value, f"{where}.products[{key!r}]")
        return Presentation(tuple(basis), moduli, products)
    if kind == "product":
        factors = _require(doc, "factors", where)
        if not isinstance(factors, list) or not factors:
            raise SpecError(f"{where}.factors: expected a non-empty list")
        return Product(tuple(spec_from_json(f, f"{where}.factors[{i}]") for i, f in enumerate(factors)))
    add = _table(_require(doc, "add", where), f"{where}.add")
    mul = _table(_require(doc, "mul", where), f"{where}.mul")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)):
        raise SpecError(f"{where}.labels: expected a list of strings")
    zero = doc.get("zero")
    one = doc.get("one")
    return Tables(add, mul,
                  None if zero is None else _int(zero, f"{where}.zero"),
                  None if one is None else _int(one, f"{where}.one"),
                  None if labels is None else tuple(labels))


def spec_to_json(spec) -> dict:
    if isinstance(spec, Modular):
        return {"kind": "modular", "m": spec.m}
    if isinstance(spec, Presentation):
        return {
            "kind": "presentation",
            "basis": list(spec.basis),
            "moduli": list(spec.moduli),
            "products": {f"{i}*{j}": list(v) for (i, j), v in sorted(spec.products.items())},
        }
    if isinstance(spec, Product):
        return {"kind": "product", "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, Tables):
        doc = {"kind": "tables", "add": [list(r) for r in spec.add], "mul": [list(r) for r in spec.mul]}
        if spec.zero is not None:
            doc["zero"] = spec.zero
        if spec.one is not None:
            doc["one"] = spec.one
        if spec.labels is not None:
            doc["labels"] = list(spec.labels)
        return doc
    raise SpecError(f"unsupported ring specification {spec!r}")


def load_ring(path: str | Path) -> FiniteRing:
    """Build a ring from a JSON spec file, or ``builtin:NAME``."""
    text = str(path)
    if text.startswith("builtin:"):
        from .catalog import builtin

        return builtin(text[len("builtin:"):])
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    spec = spec_from_json(doc)
    name = doc.get("name") or path.stem
    try:
        return build_ring(spec, name=name)
    except SpecError as exc:
        raise SpecError(f"{path}: {exc}") from None


def parse_generators(text: str, ring: FiniteRing, source: str = "<generators>") -> tuple[tuple[int, ...], ...]:
    """One row per line, whitespace-separated element labels; '#' starts a comment."""
    rows, width = [], None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        row = []
        for token in line.split():
            try:
                row.append(ring.element(token))
            except SpecError as exc:
                raise SpecError(f"{source}: line {lineno}: {exc}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SpecError(f"{source}: line {lineno}: row has {len(row)} entries, expected {width}")
        rows.append(tuple(row))
    if not rows:
        raise SpecError(f"{source}: no generator rows")
    return tuple(rows)


def load_generators(path: str | Path, ring: FiniteRing) -> tuple[tuple[int, ...], ...]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    return parse_generators(text, ring, str(path))


def format_generators(rows, ring: FiniteRing) -> str:
    return "\n".join(" ".join(ring.label(x) for x in row) for row in rows) + "\n"


def parse_order(text: str, ring: FiniteRing) -> tuple[int, ...]:
    """Comma-separated element labels (commas inside brackets do not split)."""
    parts = [p.strip() for p in _split_top(text)]
    if any(not p for p in parts):
        raise SpecError(f"--order: empty label in {text!r}")
    return tuple(ring.element(p) for p in parts)
