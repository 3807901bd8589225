"""Finitely generated abelian groups ``Z^n / im(relations)``.

Coordinates are fixed by the Smith form of the relation matrix: an ambient
vector ``a`` maps to ``U a``, whose leading entries are reduced modulo the
nontrivial invariant factors and whose trailing entries form the free part.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

from .lattice import DimensionError, IntMatrix, smith_normal_form

INFINITE = math.inf

Order = Union[int, float]


class MixedGroupError(ValueError):
    """Raised when combining elements of different groups."""


class FgAbGroup:
    """The cokernel of an integer matrix with ``ambient_rank`` rows."""

    def __init__(self, ambient_rank: int, relations: IntMatrix):
        if relations.rows != ambient_rank:
            raise DimensionError(
                f"relation matrix has {relations.rows} rows, expected {ambient_rank}")
        self.ambient_rank = ambient_rank
        self.relations = relations
        snf = smith_normal_form(relations)
        factors = snf.invariant_factors
        self._U = snf.U
        self._torsion_rows = tuple(i for i, d in enumerate(factors) if d > 1)
        self.torsion = tuple(factors[i] for i in self._torsion_rows)
        self._free_start = len(factors)
        self.rank = ambient_rank - len(factors)

    def __eq__(self, other):
        if not isinstance(other, FgAbGroup):
            return NotImplemented
        return (self.ambient_rank, self.relations) == (other.ambient_rank, other.relations)

    def __hash__(self):
        return hash((self.ambient_rank, self.relations))

    def __repr__(self):
        return f"FgAbGroup(rank={self.rank}, torsion={self.torsion})"

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    @property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return self.rank, self.torsion

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank, (0,) * len(self.torsion))

    def element(self, free: Sequence[int], torsion: Sequence[int] = ()) -> "GroupElement":
        """Element given directly in canonical coordinates."""
        if len(free) != self.rank or len(torsion) != len(self.torsion):
            raise DimensionError("coordinate lengths do not match the group")
        return GroupElement(self, tuple(free),
                            tuple(t % d for t, d in zip(torsion, self.torsion)))

    def project(self, ambient: Sequence[int]) -> "GroupElement":
        if len(ambient) != self.ambient_rank:
            raise DimensionError(
                f"ambient vector of length {len(ambient)}, expected {self.ambient_rank}")
        y = self._U.apply(ambient)
        torsion = tuple(y[i] % d for i, d in zip(self._torsion_rows, self.torsion))
        return GroupElement(self, tuple(y[self._free_start:]), torsion)

    def basis_degree(self, index: int) -> "GroupElement":
        e = [0] * self.ambient_rank
        e[index] = 1
        return self.project(e)

    def is_torsion_free(self) -> bool:
        return not self.torsion

    def generates(self, elements: Iterable[Sequence[int]]) -> bool:
        """Whether the images of the ambient vectors generate the group."""
        vecs = [tuple(v) for v in elements]
        for v in vecs:
            if len(v) != self.ambient_rank:
                raise DimensionError("ambient vector length mismatch")
        span = IntMatrix.from_columns(vecs, rows=self.ambient_rank).hstack(self.relations)
        snf = smith_normal_form(span)
        return snf.rank == self.ambient_rank and all(d == 1 for d in snf.invariant_factors)


def quotient_group(n: int, relations: IntMatrix) -> FgAbGroup:
    return FgAbGroup(n, relations)


def is_torsion_free(group: FgAbGroup) -> bool:
    return group.is_torsion_free()


def generates(group: FgAbGroup, elements: Iterable[Sequence[int]]) -> bool:
    return group.generates(elements)


class GroupElement:
    __slots__ = ("group", "free_part", "torsion_part")

    def __init__(self, group: FgAbGroup, free_part: tuple[int, ...], torsion_part: tuple[int, ...]):
        self.group = group
        self.free_part = free_part
        self.torsion_part = torsion_part

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.group is not self.group and other.group != self.group:
            raise MixedGroupError("elements live in different groups")

    def _make(self, free, torsion) -> "GroupElement":
        return GroupElement(self.group, tuple(free),
                            tuple(t % d for t, d in zip(torsion, self.group.torsion)))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self._make((a + b for a, b in zip(self.free_part, other.free_part)),
                          (a + b for a, b in zip(self.torsion_part, other.torsion_part)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self._make((a - b for a, b in zip(self.free_part, other.free_part)),
                          (a - b for a, b in zip(self.torsion_part, other.torsion_part)))

    def __neg__(self) -> "GroupElement":
        return self._make((-a for a in self.free_part), (-a for a in self.torsion_part))

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return self._make((k * a for a in self.free_part), (k * a for a in self.torsion_part))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.group == other.group and self.free_part == other.free_part
                and self.torsion_part == other.torsion_part)

    def __hash__(self):
        return hash((self.free_part, self.torsion_part))

    def is_identity(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def order(self) -> Order:
        if any(self.free_part):
            return INFINITE
        k = 1
        for t, d in zip(self.torsion_part, self.group.torsion):
            k = math.lcm(k, d // math.gcd(t, d))
        return k

    def coordinates(self) -> dict:
        return {"free": list(self.free_part), "torsion": list(self.torsion_part)}

    def __repr__(self):
        parts = [str(a) for a in self.free_part] + [f"{t}̄" for t in self.torsion_part]
        return "(" + ", ".join(parts) + ")"


def element_order(g: GroupElement) -> Order:
    return g.order()
