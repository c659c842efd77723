"""Associate classes, principal ideals and their inclusion poset."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import InternalError, OrderError, StructureError
from .ring import (FiniteRing, all_ideals, annihilator_mask, mask_to_elements)

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ClassData:
    """Associate classes rR^x in a fixed order.

    ``ideal_masks[i]`` is the bitset of ``a_i R``; ``class_of[r]`` is the
    index of the class containing element ``r``.
    """

    reps: tuple[int, ...]
    class_of: tuple[int, ...]
    ideal_masks: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.reps) - 1

    @property
    def ideal(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(mask_to_elements(m)) for m in self.ideal_masks)

    @property
    def ideal_size(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.ideal_masks)

    @property
    def class_size(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    def index_of_ideal(self, mask: int) -> int | None:
        try:
            return self.ideal_masks.index(mask)
        except ValueError:
            return None


def associate_classes(ring: FiniteRing, rep_order: Sequence[int] | None = None) -> ClassData:
    """Partition R into orbits rR^x.

    Default order: ideal size ascending, then smallest member.  With
    ``rep_order`` the classes follow the given representatives, which must
    hit every class exactly once.
    """
    units = np.array(sorted(ring.units), dtype=np.int64)
    seen = [-1] * ring.size
    orbits = []
    for r in range(ring.size):
        if seen[r] >= 0:
            continue
        orbit = tuple(sorted({int(x) for x in ring.mul[r, units]}))
        for x in orbit:
            seen[x] = len(orbits)
        orbits.append(orbit)
    masks = [ring.principal_mask(o[0]) for o in orbits]
    if len(set(masks)) != len(masks):
        raise InternalError("two associate classes generate the same principal ideal")

    if rep_order is None:
        order = sorted(range(len(orbits)), key=lambda k: (masks[k].bit_count(), orbits[k][0]))
        reps = [orbits[k][0] for k in order]
    else:
        reps = [int(r) for r in rep_order]
        for r in reps:
            if not 0 <= r < ring.size:
                raise OrderError(f"representative {r} is not an element index")
        order = [seen[r] for r in reps]
        if len(set(order)) != len(order):
            dup = next(r for k, r in enumerate(reps) if order.index(order[k]) != k)
            raise OrderError(f"representative {ring.label(dup)!r} duplicates an earlier class")
        if len(order) != len(orbits):
            missing = [orbits[k][0] for k in range(len(orbits)) if k not in order]
            raise OrderError(
                "order misses classes of " + ", ".join(repr(ring.label(m)) for m in missing))

    position = {k: i for i, k in enumerate(order)}
    class_of = tuple(position[seen[r]] for r in range(ring.size))
    return ClassData(
        reps=tuple(reps),
        class_of=class_of,
        ideal_masks=tuple(masks[k] for k in order),
        members=tuple(orbits[k] for k in order),
    )


def annihilator(ring: FiniteRing, c: int) -> frozenset[int]:
    """{r : c*r = 0}, the dual of the length-one code cR."""
    return frozenset(int(r) for r in np.flatnonzero(ring.mul[c] == ring.zero))


@dataclass(frozen=True, eq=False)
class PosetData:
    ring: FiniteRing
    classes: ClassData
    leq: tuple[tuple[bool, ...], ...]
    ann_class: tuple[int | None, ...]

    @cached_property
    def all_ideals(self) -> tuple[int, ...]:
        return all_ideals(self.ring)

    @cached_property
    def is_pir(self) -> bool:
        return set(self.all_ideals) == set(self.classes.ideal_masks)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (i, j): a_iR is maximal strictly below a_jR."""
        n = len(self.leq)
        lt = [[self.leq[i][j] and i != j for j in range(n)] for i in range(n)]
        return [
            (i, j)
            for i in range(n)
            for j in range(n)
            if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))
        ]


def poset(ring: FiniteRing, classes: ClassData) -> PosetData:
    masks = classes.ideal_masks
    leq = tuple(tuple(mi & ~mj == 0 for mj in masks) for mi in masks)
    ann = tuple(
        classes.index_of_ideal(annihilator_mask(ring, m)) for m in masks
    )
    return PosetData(ring, classes, leq, ann)


def zeta_matrix(po: PosetData) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in po.leq)


def topological_order(A: Sequence[Sequence[int]]) -> list[int]:
    """A linear extension of the relation i -> j whenever A[i][j] != 0, i != j."""
    n = len(A)
    indeg = [sum(1 for i in range(n) if i != j and A[i][j]) for j in range(n)]
    ready = [j for j in range(n) if indeg[j] == 0]
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in range(n):
            if j != i and A[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    if len(order) != n:
        raise StructureError("relation has a cycle; not the zeta matrix of a poset")
    return order


def mobius_matrix(A: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a zeta matrix: entry (i, j) is mu(a_iR, a_jR).

    Under a linear extension the matrix is upper unitriangular, so the rows
    of the inverse follow by back-substitution from the top element down.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise StructureError("zeta matrix must be square")
    if any(A[i][j] not in (0, 1) for i in range(n) for j in range(n)):
        raise StructureError("zeta matrix entries must be 0 or 1")
    if any(A[i][i] != 1 for i in range(n)):
        raise StructureError("zeta matrix must have a unit diagonal")
    inv = [None] * n
    for i in reversed(topological_order(A)):
        row = [int(i == j) for j in range(n)]
        for k in range(n):
            if k != i and A[i][k]:
                row = [r - x for r, x in zip(row, inv[k])]
        inv[i] = row
    return tuple(tuple(row) for row in inv)
