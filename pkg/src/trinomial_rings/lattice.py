"""Exact integer matrices, Smith/Hermite forms and rational cone feasibility.

Everything here works with Python ints and :class:`fractions.Fraction`, so
there is no magnitude bound on entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    """Raised when vectors or matrices have incompatible shapes."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``rows`` and ``cols`` are kept explicitly so that ``n x 0`` and
    ``0 x n`` matrices are representable.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise DimensionError("ragged rows")
        return cls(len(data), cols, tuple(x for row in data for x in row))

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], rows: Optional[int] = None) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            rows = len(cols[0]) if cols else 0
        return cls.from_rows(cols, cols=rows).transpose() if cols else cls(rows, 0, ())

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction vectors."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(self.row(i), v)) for i in range(self.rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return IntMatrix(self.rows, other.cols,
                         tuple(sum(a * b for a, b in zip(self.row(i), c))
                               for i in range(self.rows) for c in ocols))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return IntMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                   cols=self.cols + other.cols)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols} empty]"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in self.row(i)) + "]"
                         for i in range(self.rows))


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


def smith_normal_form(M) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Pivots are chosen as the nonzero entry of minimal absolute value in the
    remaining block.  The returned diagonal is canonical (nonnegative, each
    entry dividing the next).
    """
    M = _as_matrix(M)
    m, n = M.rows, M.cols
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def row_addmul(dst, src, q):  # row dst -= q * row src
        if q:
            A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_addmul(dst, src, q):  # col dst -= q * col src
        if q:
            for row in A:
                row[dst] -= q * row[src]
            for row in V:
                row[dst] -= q * row[src]

    def swap_rows(a, b):
        if a != b:
            A[a], A[b] = A[b], A[a]
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        if a != b:
            for row in A:
                row[a], row[b] = row[b], row[a]
            for row in V:
                row[a], row[b] = row[b], row[a]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    row_addmul(i, t, A[i][t] // p)
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_addmul(j, t, A[t][j] // p)
                    dirty = dirty or A[t][j] != 0
            if dirty:
                # move the smallest remainder in row/column t into the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, pi, pj = min(cands)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            # pull the offending row into row t, then keep reducing
            row_addmul(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    D = IntMatrix.from_rows(A, cols=n)
    factors = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    return SmithDecomposition(IntMatrix.from_rows(U, cols=m), D,
                              IntMatrix.from_rows(V, cols=n), factors)


def rank(M) -> int:
    return smith_normal_form(M).rank


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows: pivots strictly move right, pivots are positive
    and entries above a pivot lie in ``[0, pivot)``.
    """
    A = [list(r) for r in rows]
    out = []
    col = 0
    while A and col < ncols:
        nz = [r for r in A if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(col, ncols):
                    r[k] -= q * piv[k]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        A = [r for r in A if r is not piv and any(r)]
        out.append(piv)
        col += 1
    for idx, piv in enumerate(out):
        pc = next(k for k, x in enumerate(piv) if x)
        for above in out[:idx]:
            q = above[pc] // piv[pc]
            if q:
                above[:] = [a - q * b for a, b in zip(above, piv)]
    return [tuple(r) for r in out]


def kernel_basis(M) -> list[tuple[int, ...]]:
    """Basis of the integer kernel ``{x : M x = 0}`` in Hermite normal form."""
    M = _as_matrix(M)
    snf = smith_normal_form(M)
    raw = [snf.V.column(j) for j in range(snf.rank, M.cols)]
    return hermite_rows(raw, M.cols)


def image_contains(M, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Return an integer ``x`` with ``M x = b``, or ``None`` if none exists."""
    M = _as_matrix(M)
    if len(b) != M.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {M.rows} rows")
    snf = smith_normal_form(M)
    y = snf.U.apply(b)
    k = snf.rank
    if any(y[i] % snf.invariant_factors[i] for i in range(k)):
        return None
    if any(y[i] for i in range(k, M.rows)):
        return None
    z = [y[i] // snf.invariant_factors[i] for i in range(k)] + [0] * (M.cols - k)
    return snf.V.apply(z)


def is_primitive(v: Sequence[int]) -> bool:
    return math.gcd(*v) == 1 if len(v) else False


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Some rational solution of ``A x = b`` (free variables set to 0), or None."""
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if len(b) != nrows:
        raise DimensionError("right-hand side length mismatch")
    R = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = next((i for i in range(prow, nrows) if R[i][col]), None)
        if sel is None:
            continue
        R[prow], R[sel] = R[sel], R[prow]
        pv = R[prow][col]
        R[prow] = [x / pv for x in R[prow]]
        for i in range(nrows):
            if i != prow and R[i][col]:
                f = R[i][col]
                R[i] = [x - f * y for x, y in zip(R[i], R[prow])]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    if any(R[i][ncols] for i in range(prow, nrows)):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = R[i][ncols]
    return x


def nonnegative_combination(generators: Sequence[Sequence[int]],
                            point: Sequence) -> Optional[list[Fraction]]:
    """Find rationals ``lam >= 0`` with ``sum(lam[i] * g[i]) == point``.

    Phase one of the simplex method on exact fractions with Bland's rule;
    returns ``None`` when the point is outside the cone.
    """
    if not generators:
        return [] if all(Fraction(x) == 0 for x in point) else None
    d = len(point)
    if any(len(g) != d for g in generators):
        raise DimensionError("generators and point must share one dimension")
    k = len(generators)
    # rows: sum_i g_i[row] lam_i + a_row = |p_row|, sign-flipped so rhs >= 0
    T = []
    for row in range(d):
        p = Fraction(point[row])
        sgn = -1 if p < 0 else 1
        coeffs = [Fraction(sgn * g[row]) for g in generators]
        art = [Fraction(int(row == a)) for a in range(d)]
        T.append(coeffs + art + [sgn * p])
    basis = [k + row for row in range(d)]
    width = k + d
    # objective: minimise sum of artificials; reduced costs relative to basis
    cost = [Fraction(0)] * (width + 1)
    for row in range(d):
        for c in range(width + 1):
            cost[c] -= T[row][c]
    for c in range(k, width):
        cost[c] += 1

    while True:
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        best = None
        for row in range(d):
            a = T[row][enter]
            if a > 0:
                ratio = T[row][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[row] < basis[best[1]]):
                    best = (ratio, row)
        if best is None:  # cannot happen: phase one is bounded below by 0
            break
        prow = best[1]
        pv = T[prow][enter]
        T[prow] = [x / pv for x in T[prow]]
        for row in range(d):
            if row != prow and T[row][enter]:
                f = T[row][enter]
                T[row] = [x - f * y for x, y in zip(T[row], T[prow])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[prow])]
        basis[prow] = enter

    if -cost[width] != 0:
        return None
    lam = [Fraction(0)] * k
    for row, var in enumerate(basis):
        if var < k:
            lam[var] = T[row][width]
    return lam


def cone_contains(generators: Sequence[Sequence[int]], point: Sequence) -> bool:
    return nonnegative_combination(generators, point) is not None


def cone_is_full(generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> bool:
    """True iff the generators positively span all of ``Q^dim``."""
    if dim is None:
        if not generators:
            raise DimensionError("dimension needed for an empty generator set")
        dim = len(generators[0])
    for i in range(dim):
        for sgn in (1, -1):
            e = [0] * dim
            e[i] = sgn
            if not cone_contains(generators, e):
                return False
    return True
