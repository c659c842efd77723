"""Built-in rings used by the examples, tests and ``builtin:NAME`` on the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SpecError
from .ring import FiniteRing, Modular, Presentation, Product, build_ring


@dataclass(frozen=True)
class CatalogEntry:
    spec: object
    order: tuple[str, ...] | None = None
    """Class representatives in the order used by the published matrices."""
    chain: tuple[int, int] | None = None
    """(q, nu) for chain rings: residue field size and nilpotency index."""


F2_UV_SEMI = Presentation(
    basis=("1", "u", "v"),
    moduli=(2, 2, 2),
    # u^2 = 0, v^2 = v, uv = 0
    products={(1, 1): (0, 0, 0), (1, 2): (0, 0, 0), (2, 2): (0, 0, 1)},
)

F2_UV_SQUARES = Presentation(
    basis=("1", "u", "v", "uv"),
    moduli=(2, 2, 2, 2),
    # u^2 = v^2 = 0
    products={
        (1, 1): (0, 0, 0, 0), (1, 2): (0, 0, 0, 1), (1, 3): (0, 0, 0, 0),
        (2, 2): (0, 0, 0, 0), (2, 3): (0, 0, 0, 0), (3, 3): (0, 0, 0, 0),
    },
)

F2_UV_CUBE = Presentation(
    basis=("1", "u", "v"),
    moduli=(2, 2, 2),
    # u^2 = uv = v^2 = 0; not Frobenius
    products={(1, 1): (0, 0, 0), (1, 2): (0, 0, 0), (2, 2): (0, 0, 0)},
)

Z4_X = Presentation(
    basis=("1", "x", "x^2"),
    moduli=(4, 2, 2),
    # x^3 = 2, 2x = 0
    products={(1, 1): (0, 0, 1), (1, 2): (2, 0, 0), (2, 2): (0, 0, 0)},
)

CATALOG: dict[str, CatalogEntry] = {
    "Z4": CatalogEntry(Modular(4), chain=(2, 2)),
    "Z6": CatalogEntry(Modular(6), order=("0", "3", "2", "1")),
    "Z8": CatalogEntry(Modular(8), chain=(2, 3)),
    "Z9": CatalogEntry(Modular(9), chain=(3, 2)),
    "Z12": CatalogEntry(Modular(12), order=("0", "6", "4", "3", "2", "1")),
    "GF2": CatalogEntry(Modular(2), chain=(2, 1)),
    "GF3": CatalogEntry(Modular(3), chain=(3, 1)),
    "F2+uF2+vF2": CatalogEntry(F2_UV_SEMI, order=("0", "u", "v", "1+v", "u+v", "1")),
    "F2[u,v]/<u^2,v^2>": CatalogEntry(F2_UV_SQUARES, order=("0", "1", "u", "v", "u+v", "uv")),
    "Z4[x]/<x^3-2,2x>": CatalogEntry(Z4_X, order=("0", "2", "x^2", "x", "1"), chain=(2, 4)),
    "F2[u,v]/<u^2,uv,v^2>": CatalogEntry(F2_UV_CUBE),
    "Z2xZ3": CatalogEntry(Product((Modular(2), Modular(3)))),
    "Z2xZ2": CatalogEntry(Product((Modular(2), Modular(2)))),
}

FROBENIUS_RINGS = ("Z4", "Z6", "Z8", "Z9", "Z12", "GF2", "GF3",
                   "F2+uF2+vF2", "F2[u,v]/<u^2,v^2>", "Z4[x]/<x^3-2,2x>")
PIR_RINGS = ("Z4", "Z6", "Z8", "Z9", "Z12", "GF2", "GF3", "F2+uF2+vF2", "Z4[x]/<x^3-2,2x>")
CHAIN_RINGS = tuple(name for name, e in CATALOG.items() if e.chain)


@lru_cache(maxsize=None)
def builtin(name: str) -> FiniteRing:
    if name not in CATALOG:
        raise SpecError(f"unknown built-in ring {name!r}; known: {', '.join(CATALOG)}")
    return build_ring(CATALOG[name].spec, name=name)


def paper_order(name: str, ring: FiniteRing | None = None) -> tuple[int, ...] | None:
    """Element indices of the published representative order, if any."""
    order = CATALOG[name].order
    if order is None:
        return None
    ring = ring or builtin(name)
    return tuple(ring.element(label) for label in order)
