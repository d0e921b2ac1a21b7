"""Integer matrices, Smith normal form and integer kernels.

Entries are Python ints throughout; intermediate values in the Smith
reduction can grow well beyond machine words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["IntMatrix", "SmithNF", "smith_normal_form", "kernel_basis"]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        cols = [list(c) for c in columns]
        if any(len(c) != rows for c in cols):
            raise ValueError("ragged columns")
        return cls.from_rows([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + other.scale(-1)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a = self.to_rows()
        bt = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a], cols=other.cols)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        return [sum(x * y for x, y in zip(self.row(i), vec)) for i in range(self.rows)]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows([a + b for a, b in zip(self.to_rows(), other.to_rows())],
                                   cols=self.cols + other.cols)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def __str__(self) -> str:
        return str(self.to_rows())


@dataclass(frozen=True)
class SmithNF:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a: IntMatrix) -> SmithNF:
    """Smith decomposition with a fixed pivot rule.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, first in row-major order.  Diagonal entries come out nonnegative
    and each divides the next.
    """
    m, n = a.rows, a.cols
    S = a.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in S:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        S[dst] = [x + c * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = S[i][j]
                    if x and (best is None or abs(x) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish(U, S, V, m, n)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % p), None)
            if bad is not None:
                add_row(t, bad[0], 1)
                continue
            if p < 0:
                S[t] = [-x for x in S[t]]
                U[t] = [-x for x in U[t]]
            break
    return _finish(U, S, V, m, n)


def _finish(U, S, V, m, n) -> SmithNF:
    return SmithNF(IntMatrix.from_rows(U, cols=m), IntMatrix.from_rows(S, cols=n),
                   IntMatrix.from_rows(V, cols=n))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ``{x : a x = 0}``."""
    snf = smith_normal_form(a)
    r = snf.rank
    cols = [snf.V.column(j) for j in range(r, a.cols)]
    return IntMatrix.from_columns(cols, rows=a.cols)


def unimodular_completion(vec: Iterable[int]) -> tuple[int, IntMatrix]:
    """Return ``(g, W)`` with ``W`` unimodular and ``W @ vec == (g, 0, ..., 0)``, ``g >= 0``."""
    vec = list(vec)
    snf = smith_normal_form(IntMatrix.from_columns([vec], rows=len(vec)))
    g = snf.S[0, 0] if vec else 0
    # U vec V = S with V = [+-1]; absorb V's sign into U
    if vec and snf.V[0, 0] == -1:
        return g, snf.U.scale(-1)
    return g, snf.U
