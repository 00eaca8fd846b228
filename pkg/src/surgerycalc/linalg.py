"""Exact integer linear algebra: Smith normal form and what it buys us.

Everything here works on Python ints, so entries never overflow.  Matrices
are small (the diagrams this package handles rarely exceed a few dozen
components), so the algorithms favour clarity over asymptotics.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence


class DimensionError(ValueError):
    """Raised when matrix/vector shapes do not fit together."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular integer matrix.

    ``rows`` and ``cols`` are stored explicitly so that 0 x n and n x 0
    matrices keep their shape.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(f"entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = int(d)
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols_o = [other.column(j) for j in range(other.cols)]
            return IntMatrix(self.rows, other.cols, tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in cols_o) for r in self.entries))
        return self.apply(other)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} does not fit {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of non-square matrix")
        n = self.rows
        m = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i))


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix.from_rows(a)


@dataclass(frozen=True)
class SNFDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A) -> SNFDecomposition:
    """Smith normal form with transformation matrices.

    Pivots on the entry of least absolute value in the remaining block and
    clears its row and column by Euclidean steps.  If the pivot fails to
    divide some later entry, that entry's row is folded into the pivot row
    and the block is reduced again, which enforces d_1 | d_2 | ...
    The result is checked by multiplication before it is returned.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue  # a smaller remainder appeared; re-pivot on it
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        if best is None:
            break

    snf = SNFDecomposition(IntMatrix.from_rows(U, m), IntMatrix.from_rows(D, n), IntMatrix.from_rows(V, n))
    if snf.U @ A @ snf.V != snf.D:
        raise ArithmeticError("Smith normal form failed verification")
    return snf


class DiophantineSolution(NamedTuple):
    solution: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]


def _check_rhs(A: IntMatrix, b: Sequence[int]) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {A.rows} rows")
    return b


def kernel_basis(A) -> tuple[tuple[int, ...], ...]:
    """A basis of the integer kernel {x : A x = 0}."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    return tuple(snf.V.column(j) for j in range(snf.rank, A.cols))


def solve_diophantine(A, b: Sequence[int], snf: Optional[SNFDecomposition] = None) -> Optional[DiophantineSolution]:
    """Solve ``A x = b`` over the integers.

    Returns ``None`` when no integer solution exists, otherwise one solution
    together with a basis of the integer kernel of A.
    """
    A = as_matrix(A)
    b = _check_rhs(A, b)
    snf = snf or smith_normal_form(A)
    c = snf.U.apply(b)
    r = snf.rank
    d = snf.diagonal
    if any(c[i] for i in range(r, A.rows)):
        return None
    if any(c[i] % d[i] for i in range(r)):
        return None
    y = [c[i] // d[i] for i in range(r)] + [0] * (A.cols - r)
    x = snf.V.apply(y)
    kernel = tuple(snf.V.column(j) for j in range(r, A.cols))
    return DiophantineSolution(x, kernel)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def cokernel_order(A, b: Sequence[int], snf: Optional[SNFDecomposition] = None) -> Optional[int]:
    """Order of the class of b in coker(A) = Z^rows / A Z^cols.

    This is the least k >= 1 with ``k*b`` in the column span of A, or None
    when the class has infinite order.
    """
    A = as_matrix(A)
    b = _check_rhs(A, b)
    snf = snf or smith_normal_form(A)
    c = snf.U.apply(b)
    r = snf.rank
    if any(c[i] for i in range(r, A.rows)):
        return None
    k = 1
    for ci, di in zip(c[:r], snf.diagonal):
        k = _lcm(k, di // gcd(di, ci))
    return k


def invariant_factors(diag: Iterable[int], rows: int) -> tuple[list[int], int]:
    """Split a Smith diagonal into (torsion factors > 1, free rank) of the cokernel."""
    diag = list(diag)
    torsion = [d for d in diag if d > 1]
    free_rank = rows - sum(1 for d in diag if d != 0)
    return torsion, free_rank
