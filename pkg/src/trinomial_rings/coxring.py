"""Coarsened gradings of R(A, n, L)[S_1, ..., S_m] via the block matrix [[P, 0], [d, d']]."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .abgroup import INFINITE, FgAbGroup, GroupElement, Order, quotient_group
from .lattice import DimensionError, IntMatrix, cone_is_full, is_primitive, nonnegative_combination
from .polynomial import is_homogeneous
from .trinomial import ConsistencyError, RingPresentation


@dataclass(frozen=True)
class DowngradeData:
    s: int
    m: int
    d: IntMatrix
    d_prime: IntMatrix

    @classmethod
    def make(cls, d: Sequence[Sequence[int]], d_prime: Sequence[Sequence[int]],
             m: Optional[int] = None, n: Optional[int] = None) -> "DowngradeData":
        d = IntMatrix.from_rows(d, cols=n)
        if m is None:
            m = len(d_prime[0]) if d_prime else 0
        d_prime = IntMatrix.from_rows(d_prime, cols=m) if d_prime else IntMatrix.zeros(d.rows, m)
        return cls(d.rows, m, d, d_prime)


@dataclass(frozen=True)
class AdmissibilityReport:
    s_in_bounds: bool
    primitive: bool
    distinct: bool
    full_cone: bool
    non_primitive_columns: tuple[int, ...] = ()
    duplicate_columns: tuple[tuple[int, int], ...] = ()
    messages: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return self.s_in_bounds and self.primitive and self.distinct and self.full_cone

    def as_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "s_in_bounds": self.s_in_bounds,
            "primitive": self.primitive,
            "distinct": self.distinct,
            "full_cone": self.full_cone,
            "non_primitive_columns": list(self.non_primitive_columns),
            "duplicate_columns": [list(p) for p in self.duplicate_columns],
            "messages": list(self.messages),
        }


class InadmissibleError(ValueError):
    def __init__(self, report: AdmissibilityReport):
        self.report = report
        super().__init__("; ".join(report.messages) or "inadmissible downgrade data")


def block_matrix(P: IntMatrix, d: IntMatrix, d_prime: IntMatrix) -> IntMatrix:
    if d.cols != P.cols or d_prime.rows != d.rows:
        raise DimensionError(
            f"d must be s x {P.cols} and d' must have as many rows as d; "
            f"got d {d.shape}, d' {d_prime.shape}")
    top = P.hstack(IntMatrix.zeros(P.rows, d_prime.cols))
    return top.vstack(d.hstack(d_prime))


def check_admissible(dotP: IntMatrix, r: int, s: int, n: int, m: int) -> AdmissibilityReport:
    if dotP.shape != (r + s, n + m):
        raise DimensionError(f"expected a {(r + s, n + m)} matrix, got {dotP.shape}")
    msgs = []
    s_ok = 0 < s < n + m - r
    if not s_ok:
        msgs.append(f"bound violated: need 0 < s < n + m - r = {n + m - r}, got s = {s}")
    cols = dotP.columns()
    bad = tuple(c for c, v in enumerate(cols) if not is_primitive(v))
    if bad:
        msgs.append(f"non-primitive columns: {list(bad)}")
    dups = tuple((a, b) for a, b in itertools.combinations(range(len(cols)), 2)
                 if cols[a] == cols[b])
    if dups:
        msgs.append(f"repeated columns: {[list(p) for p in dups]}")
    full = bool(cols) and dotP.rows > 0 and cone_is_full(cols, dotP.rows)
    if not full:
        msgs.append(f"columns do not generate Q^{r + s} as a cone")
    return AdmissibilityReport(s_ok, not bad, not dups, full, bad, dups, tuple(msgs))


@dataclass(frozen=True)
class CoxPresentation:
    base: RingPresentation
    data: DowngradeData
    dotP: IntMatrix
    Kdot: FgAbGroup
    T_degrees: tuple[GroupElement, ...]
    S_degrees: tuple[GroupElement, ...]
    admissibility: AdmissibilityReport = field(compare=False)

    @property
    def degrees(self) -> tuple[GroupElement, ...]:
        return self.T_degrees + self.S_degrees

    def column_names(self) -> list[str]:
        return self.base.variable_names() + [f"S_{k}" for k in range(1, self.data.m + 1)]


def build(base: RingPresentation, data: DowngradeData) -> CoxPresentation:
    n, r = base.n_total, base.r
    dotP = block_matrix(base.P, data.d, data.d_prime)
    report = check_admissible(dotP, r, data.s, n, data.m)
    if not report.admissible:
        raise InadmissibleError(report)
    total = n + data.m
    Kdot = quotient_group(total, dotP.transpose())
    degrees = [Kdot.basis_degree(c) for c in range(total)]
    cox = CoxPresentation(base, data, dotP, Kdot, tuple(degrees[:n]), tuple(degrees[n:]), report)

    for g in base.relations:
        if is_homogeneous(g, cox.T_degrees) is None:
            raise ConsistencyError(f"relation {g.render(base.variable_names())} is not homogeneous")
    basis = [tuple(int(a == b) for b in range(total)) for a in range(total)]
    if not Kdot.generates(basis):
        raise ConsistencyError("variable degrees do not generate the coarsened group")
    return cox


def isotropy_order(cox: CoxPresentation, column: int) -> Order:
    """Order of the isotropy along the divisor of a column: gcd of its first r entries."""
    v = cox.dotP.column(column)
    if not is_primitive(v):
        raise ValueError(f"column {column} is not primitive")
    w = v[:cox.base.r]
    if not any(w):
        return INFINITE
    return math.gcd(*w)


def positive_kernel_vector(dotP: IntMatrix) -> Optional[list[Fraction]]:
    """A rational ``x`` with every entry ``>= 1`` and ``dotP x = 0``, if one exists.

    Writing ``x = 1 + y`` turns this into ``sum y_c v_c = -sum v_c`` with ``y >= 0``.
    """
    cols = dotP.columns()
    target = [-sum(v[k] for v in cols) for k in range(dotP.rows)]
    y = nonnegative_combination(cols, target)
    if y is None:
        return None
    x = [1 + yc for yc in y]
    if any(dotP.apply(x)):
        raise ConsistencyError("positive kernel vector fails dotP x = 0")
    return x


def surface_recipe(base: RingPresentation) -> DowngradeData:
    """Downgrade data with ``s = 1``, ``m = 2`` and ``d' = (1, -1)``.

    In every block ``d_ij`` is the smallest positive integer coprime to
    ``l_ij`` with ``d_ij / l_ij`` strictly above the previous ratio.
    """
    t = base.triple
    row = []
    for li in t.L:
        prev = None
        for lij in li:
            dij = 1
            while math.gcd(dij, lij) != 1 or (prev is not None and Fraction(dij, lij) <= prev):
                dij += 1
            row.append(dij)
            prev = Fraction(dij, lij)
    return DowngradeData.make([row], [[1, -1]])


def degrees_pairwise_distinct(cox: CoxPresentation) -> bool:
    return all(a != b for a, b in itertools.combinations(cox.degrees, 2))


def nonassociation_certificate(cox: CoxPresentation) -> str:
    """``"certified"`` when all generator degrees differ, ``"inconclusive"`` otherwise."""
    return "certified" if degrees_pairwise_distinct(cox) else "inconclusive"
