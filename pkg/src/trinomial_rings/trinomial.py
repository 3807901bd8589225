"""The trinomial algebras R(A, n, L) together with their K-grading.

Variables are ``T_ij`` with ``0 <= i <= r`` and ``1 <= j <= n_i``, ordered
lexicographically in ``(i, j)``; that order fixes the columns of ``P``, the
exponent slots of every polynomial and all report orderings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .abgroup import FgAbGroup, GroupElement, quotient_group
from .lattice import IntMatrix
from .polynomial import SparsePoly, is_homogeneous

ENUMERATION_BOUND = 10


class InvalidTripleError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NotSincereError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent routes to the same answer disagreed."""


@dataclass(frozen=True)
class TripleData:
    A: tuple[tuple[Fraction, Fraction], ...]
    n: tuple[int, ...]
    L: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, A, n, L) -> "TripleData":
        return cls(tuple((Fraction(b), Fraction(c)) for b, c in A),
                   tuple(int(x) for x in n),
                   tuple(tuple(int(x) for x in row) for row in L))

    @property
    def r(self) -> int:
        return len(self.A) - 1

    @property
    def n_total(self) -> int:
        return sum(self.n)

    def variables(self) -> list[tuple[int, int]]:
        return [(i, j) for i, ni in enumerate(self.n) for j in range(1, ni + 1)]

    def index(self, i: int, j: int) -> int:
        if not (0 <= i <= self.r and 1 <= j <= self.n[i]):
            raise IndexError(f"no variable T_{i}{j}")
        return sum(self.n[:i]) + j - 1


def variable_name(i: int, j: int) -> str:
    return f"T_{i}{j}" if i < 10 and j < 10 else f"T_{i}_{j}"


def validate(t: TripleData) -> list[str]:
    """Violations of the hypotheses on ``(A, n, L)``; empty means valid."""
    problems = []
    r = len(t.A) - 1
    if r < 1:
        problems.append(f"need r >= 1 (at least two vectors in A), got {len(t.A)}")
    if len(t.n) != len(t.A):
        problems.append(f"length of n ({len(t.n)}) differs from length of A ({len(t.A)})")
    for i, ni in enumerate(t.n):
        if ni < 1:
            problems.append(f"positivity: n_{i} = {ni} must be positive")
    if len(t.L) != len(t.n):
        problems.append(f"L has {len(t.L)} blocks, expected {len(t.n)}")
    for i, (ni, row) in enumerate(zip(t.n, t.L)):
        if len(row) != ni:
            problems.append(f"shape: block {i} of L has {len(row)} entries, expected n_{i} = {ni}")
        for j, lij in enumerate(row, start=1):
            if lij < 1:
                problems.append(f"positivity: l_{i}{j} = {lij} must be positive")
    for i, k in itertools.combinations(range(len(t.A)), 2):
        if _det(t.A[i], t.A[k]) == 0:
            problems.append(f"α_{{{i}{k}}} = 0: a_{i} and a_{k} are linearly dependent")
    return problems


def _det(a, b) -> Fraction:
    return a[0] * b[1] - b[0] * a[1]


def _require_valid(t: TripleData):
    problems = validate(t)
    if problems:
        raise InvalidTripleError(problems)


def alpha(t: TripleData, i: int, k: int) -> Fraction:
    if not (0 <= i <= t.r and 0 <= k <= t.r):
        raise IndexError(f"alpha index out of range: ({i}, {k}) for r = {t.r}")
    return _det(t.A[i], t.A[k])


def block_monomial(t: TripleData, i: int) -> tuple[int, ...]:
    """Exponent vector of ``T_i^{l_i}``."""
    exps = [0] * t.n_total
    for j, lij in enumerate(t.L[i], start=1):
        exps[t.index(i, j)] = lij
    return tuple(exps)


def relation(t: TripleData, i: int, j: int, k: int) -> SparsePoly:
    if not (0 <= i < j < k <= t.r):
        raise IndexError(f"need 0 <= i < j < k <= r, got ({i}, {j}, {k})")
    _require_valid(t)
    return SparsePoly(t.n_total, {
        block_monomial(t, i): alpha(t, j, k),
        block_monomial(t, j): alpha(t, k, i),
        block_monomial(t, k): alpha(t, i, j),
    })


def p_matrix(t: TripleData) -> IntMatrix:
    rows = []
    for row in range(1, t.r + 1):
        entries = []
        for i, j in t.variables():
            lij = t.L[i][j - 1]
            entries.append(-lij if i == 0 else (lij if i == row else 0))
        rows.append(entries)
    return IntMatrix.from_rows(rows, cols=t.n_total)


@dataclass(frozen=True)
class RingPresentation:
    triple: TripleData
    variable_index: tuple[tuple[int, int], ...]
    P: IntMatrix
    K: FgAbGroup
    degrees: tuple[GroupElement, ...]
    relations: tuple[SparsePoly, ...] = field(default=())

    @property
    def n_total(self) -> int:
        return len(self.variable_index)

    @property
    def r(self) -> int:
        return self.triple.r

    def variable_names(self) -> list[str]:
        return [variable_name(i, j) for i, j in self.variable_index]

    def degree(self, i: int, j: int) -> GroupElement:
        return self.degrees[self.triple.index(i, j)]


def presentation(t: TripleData) -> RingPresentation:
    _require_valid(t)
    P = p_matrix(t)
    K = quotient_group(t.n_total, P.transpose())
    degrees = tuple(K.basis_degree(c) for c in range(t.n_total))
    rels = tuple(relation(t, i, i + 1, i + 2) for i in range(t.r - 1))
    return RingPresentation(t, tuple(t.variables()), P, K, degrees, rels)


def relation_degree(p: RingPresentation) -> Optional[GroupElement]:
    """Common degree of all ``g_{i,j,k}``, or None if they are not homogeneous of one degree."""
    found = None
    for ijk in itertools.combinations(range(p.r + 1), 3):
        w = is_homogeneous(relation(p.triple, *ijk), p.degrees)
        if w is None or (found is not None and w != found):
            return None
        found = w
    return found


def is_sincere(t: TripleData) -> bool:
    return t.r >= 2 and all(ni * lij > 1 for ni, row in zip(t.n, t.L) for lij in row)


def block_gcds(t: TripleData) -> tuple[int, ...]:
    return tuple(math.gcd(*row) for row in t.L)


def pairwise_coprime(values: Sequence[int]) -> bool:
    return all(math.gcd(a, b) == 1 for a, b in itertools.combinations(values, 2))


class Factoriality(NamedTuple):
    factorial: bool
    block_gcds: tuple[int, ...]
    torsion: tuple[int, ...]


def factoriality(t: TripleData, pres: Optional[RingPresentation] = None) -> Factoriality:
    """Factoriality verdict from the gcd criterion, cross-checked against the torsion of K.

    Only defined for sincere triples; raises :class:`ConsistencyError` if the
    two criteria disagree.
    """
    if not is_sincere(t):
        raise NotSincereError("factoriality criterion requires a sincere triple")
    pres = pres or presentation(t)
    gcds = block_gcds(t)
    by_gcd = pairwise_coprime(gcds)
    by_torsion = pres.K.is_torsion_free()
    if by_gcd != by_torsion:
        raise ConsistencyError(
            f"gcd criterion says {by_gcd} (block gcds {gcds}) but K has torsion {pres.K.torsion}")
    return Factoriality(by_gcd, gcds, pres.K.torsion)


def is_factorial(t: TripleData) -> bool:
    return factoriality(t).factorial


def pointedness_witness(t: TripleData) -> tuple[int, ...]:
    """Strictly positive vector in the kernel of ``P``, one entry per variable."""
    _require_valid(t)
    total = math.prod(t.n) * math.prod(l for row in t.L for l in row)
    zeta = tuple(total // (t.n[i] * t.L[i][j - 1]) for i, j in t.variables())
    P = p_matrix(t)
    if any(z <= 0 for z in zeta) or any(P.apply(zeta)):
        raise ConsistencyError(f"pointedness witness {zeta} is not a positive kernel vector")
    return zeta


def complexity_check(p: RingPresentation) -> bool:
    """Rank of K equals ``n - r`` and the variable degrees generate K."""
    n = p.n_total
    basis = [tuple(int(a == b) for b in range(n)) for a in range(n)]
    return p.K.rank == n - p.r and p.K.generates(basis)


def _block_of_column(p: RingPresentation, col: int) -> int:
    return p.variable_index[col][0]


def degree_extremal_obstruction(p: RingPresentation, i: int, j: int) -> Optional[tuple[int, ...]]:
    """A vector ``m`` with ``(P^T m)`` equal to 1 at ``T_ij`` and ``<= 0`` elsewhere.

    Such ``m`` exists exactly when ``n_i = 1`` and ``l_i1 = 1``; the witness
    returned then is ``-e_1`` for ``i = 0`` and ``e_i`` otherwise.
    """
    t = p.triple
    t.index(i, j)
    if t.n[i] != 1 or t.L[i][0] != 1:
        return None
    m = [0] * t.r
    if i == 0:
        m[0] = -1
    else:
        m[i - 1] = 1
    image = p.P.transpose().apply(m)
    target = t.index(i, j)
    if image[target] != 1 or any(v > 0 for c, v in enumerate(image) if c != target):
        raise ConsistencyError(f"structural witness {m} fails for T_{i}{j}")
    return tuple(m)


def bounded_extremal_search(P: IntMatrix, target: int,
                            bound: int = ENUMERATION_BOUND) -> Optional[tuple[int, ...]]:
    """Search ``|m_s| <= bound`` for ``(P^T m)[target] == 1`` and all other entries ``<= 0``.

    Plain depth-first enumeration over the box, pruned with interval bounds on
    every column; it knows nothing about the block shape of ``P``.
    """
    r, ncols = P.rows, P.cols
    cols = P.columns()
    # reach[s][c]: largest |contribution| rows s.. can still add to column c
    reach = [[0] * ncols for _ in range(r + 1)]
    for s in range(r - 1, -1, -1):
        reach[s] = [reach[s + 1][c] + bound * abs(cols[c][s]) for c in range(ncols)]

    partial = [0] * ncols
    m = [0] * r

    def feasible(s: int) -> bool:
        for c in range(ncols):
            lo, hi = partial[c] - reach[s][c], partial[c] + reach[s][c]
            if c == target:
                if not lo <= 1 <= hi:
                    return False
            elif lo > 0:
                return False
        return True

    def dfs(s: int) -> bool:
        if not feasible(s):
            return False
        if s == r:
            return True
        for v in range(-bound, bound + 1):
            m[s] = v
            for c in range(ncols):
                partial[c] += v * cols[c][s]
            if dfs(s + 1):
                return True
            for c in range(ncols):
                partial[c] -= v * cols[c][s]
        m[s] = 0
        return False

    return tuple(m) if dfs(0) else None


def standard_configuration(r: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """Pairwise independent vectors (1,0), (1,1), (0,1), (1,2), ..., (1,r-1)."""
    base = [(1, 0), (1, 1), (0, 1)] + [(1, k) for k in range(2, r)]
    return tuple((Fraction(b), Fraction(c)) for b, c in base[:r + 1])
