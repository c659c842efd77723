"""Linear codes over a finite ring, enumerated exhaustively."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import SizeError, SpecError
from .ring import FiniteRing

DEFAULT_CAP = 2 ** 24
_CHUNK = 1 << 18

Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A submodule of R^n with its codewords listed in sorted order."""

    ring: FiniteRing = field(repr=False)
    n: int
    generators: tuple[Word, ...]
    words: tuple[Word, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.n)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.word_set

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise SizeError(f"{what}: {count} exceeds the enumeration cap {cap}")


def _check_generators(ring: FiniteRing, generators, n: int | None) -> tuple[tuple[Word, ...], int]:
    gens = tuple(tuple(int(x) for x in row) for row in generators)
    if n is None:
        if not gens:
            raise SpecError("cannot infer the length of a code with no generators")
        n = len(gens[0])
    if n < 1:
        raise SpecError("code length must be at least 1")
    for row in gens:
        if len(row) != n:
            raise SpecError(f"generator row {row} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < ring.size:
                raise SpecError(f"generator entry {x} is not an element index")
    return gens, n


def _sorted_words(arr: np.ndarray) -> tuple[Word, ...]:
    arr = np.unique(arr, axis=0)
    return tuple(tuple(int(x) for x in row) for row in arr)


def span(ring: FiniteRing, generators: Sequence[Sequence[int]], n: int | None = None,
         cap: int = DEFAULT_CAP) -> LinearCode:
    """All R-linear combinations of the generator rows."""
    gens, n = _check_generators(ring, generators, n)
    _check_cap(ring.size ** len(gens), cap, f"|R|^m = {ring.size}^{len(gens)}")
    words = np.full((1, n), ring.zero, dtype=np.int64)
    scalars = np.arange(ring.size)
    for g in gens:
        g = np.array(g, dtype=np.int64)
        multiples = np.unique(ring.mul[scalars[:, None], g[None, :]], axis=0)
        combos = ring.add[words[:, None, :], multiples[None, :, :]].reshape(-1, n)
        words = np.unique(combos, axis=0)
    return LinearCode(ring, n, gens, _sorted_words(words))


def _all_vectors(size: int, n: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), n), dtype=np.int64)
    for pos in range(n - 1, -1, -1):
        digits[:, pos] = idx % size
        idx //= size
    return digits


def orthogonal_complement(ring: FiniteRing, vectors: np.ndarray, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Rows v of R^n with u.v = 0 for every row u of ``vectors``."""
    total = ring.size ** n
    _check_cap(total, cap, f"|R|^n = {ring.size}^{n}")
    keep = []
    for start in range(0, total, _CHUNK):
        block = _all_vectors(ring.size, n, start, min(total, start + _CHUNK))
        ok = np.ones(len(block), dtype=bool)
        for u in vectors:
            acc = np.full(len(block), ring.zero, dtype=np.int64)
            for pos in range(n):
                acc = ring.add[acc, ring.mul[u[pos], block[:, pos]]]
            ok &= acc == ring.zero
        keep.append(block[ok])
    return np.concatenate(keep, axis=0)


def dual(code: LinearCode, cap: int = DEFAULT_CAP) -> LinearCode:
    """C^perp by exhaustive scan of R^n; orthogonality to the generators suffices."""
    gens = np.array(code.generators, dtype=np.int64).reshape(len(code.generators), code.n)
    words = _sorted_words(orthogonal_complement(code.ring, gens, code.n, cap))
    return LinearCode(code.ring, code.n, words, words)


def column_span_size(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """|span of the generator matrix columns| inside R^m."""
    if not code.generators:
        return 1
    columns = list(zip(*code.generators))
    return span(code.ring, columns, n=len(code.generators), cap=cap).size


def full_code(ring: FiniteRing, n: int) -> LinearCode:
    gens = tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n))
    return span(ring, gens)


def zero_code(ring: FiniteRing, n: int) -> LinearCode:
    return span(ring, [(ring.zero,) * n])


def random_generators(ring: FiniteRing, m: int, n: int, rng: random.Random) -> tuple[Word, ...]:
    return tuple(tuple(rng.randrange(ring.size) for _ in range(n)) for _ in range(m))


def random_code(ring: FiniteRing, rng: random.Random, max_n: int = 3, max_m: int = 2) -> LinearCode:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    return span(ring, random_generators(ring, m, n, rng), n=n)
