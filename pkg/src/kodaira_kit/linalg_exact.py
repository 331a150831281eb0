"""Dense exact matrices over the rationals: rank, kernel dimension, products.

Rank is computed by Bareiss fraction-free elimination after clearing row
denominators (which does not change the rank). The integer elimination runs
in the selected kernel backend.
"""

from fractions import Fraction
from math import lcm

from . import kernels
from .errors import DimensionMismatch
from .symbolic.scalars import to_scalar


class ExactMatrix:
    """Immutable ``rows x cols`` matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(to_scalar(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, key, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for shape {self.shape}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other.entries[k * other.cols + j] for k in range(self.cols)), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, out)

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}, {self.cols}, {self.to_rows()!r})"


def _integer_rows(m):
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        scale = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * scale) for x in r])
    return rows


def rank(m, backend=None):
    """Rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return kernels.int_rank(_integer_rows(m), backend=backend)


def kernel_dim(m, backend=None):
    """Dimension of the right kernel: ``cols - rank``."""
    return m.cols - rank(m, backend=backend)


def field_rank(rows):
    """Rank of a matrix with entries in any exact field (Fraction, GaussRat, ...)."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    m, c = len(a), len(a[0])
    r = 0
    for col in range(c):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            f = a[i][col]
            if f != 0:
                t = f / p
                a[i] = [x - t * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def field_det(rows, one=1):
    """Determinant of a square matrix over an exact field (Fraction, GaussRat, RationalFunc)."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("determinant needs a square matrix")
    det = one
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return one * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for i in range(col + 1, n):
            f = a[i][col]
            if f != 0:
                t = f / p
                a[i] = [x - t * y for x, y in zip(a[i], a[col])]
    return det


def leading_principal_minors(rows, one=1):
    n = len(rows)
    return [field_det([r[:k] for r in rows[:k]], one=one) for k in range(1, n + 1)]
