"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Ranks and pivot columns come from
fraction-free (Bareiss) elimination on an integer copy of the matrix, so no
floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DependentBasis, DimensionMismatch, NotInSpan

Vector = tuple[Fraction, ...]


def to_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact rationals (immutable)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [to_vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        return cls.from_rows(columns, cols=rows).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> Matrix:
        n = len(values)
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = Fraction(v)
        return cls(n, n, tuple(entries))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def to_columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(x for j in range(self.cols) for x in self.column(j)))

    def select_columns(self, indices: Sequence[int]) -> Matrix:
        return Matrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise DimensionMismatch("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.to_columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for c in cols:
                out.append(sum((a * c[k] for k, a in nz), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def __mul__(self, scalar) -> Matrix:
        s = Fraction(scalar)
        return Matrix(self.rows, self.cols, tuple(s * x for x in self.entries))

    __rmul__ = __mul__


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank and pivots are unchanged."""
    out = []
    for r in m.to_rows():
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss_pivots(rows: list[list[int]], ncols: int) -> list[int]:
    """Fraction-free row echelon reduction in place; returns pivot column indices.

    The pivot in each column is the first nonzero entry at or below the current
    row, so the result is deterministic.
    """
    nrows = len(rows)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            lead = row[c]
            if lead:
                # entries left of column c are already zero in both rows
                rows[i] = row[:c] + [(piv * x - lead * y) // prev
                                     for x, y in zip(row[c:], piv_row[c:])]
            elif piv != prev:
                rows[i] = row[:c] + [piv * x // prev for x in row[c:]]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def pivot_columns(m: Matrix) -> list[int]:
    """Lexicographically first maximal set of independent columns."""
    if m.rows == 0 or m.cols == 0:
        return []
    return _bareiss_pivots(_integer_rows(m), m.cols)


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    return len(pivot_columns(m))


def column_space_basis(m: Matrix) -> Matrix:
    """Columns of ``m`` at the pivot positions of its echelon form."""
    return m.select_columns(pivot_columns(m))


def _integer_inverse(a: list[list[int]]) -> tuple[list[list[int]], int]:
    """Fraction-free Gauss-Jordan: returns ``(adj, det)`` with ``a^-1 = adj / det``."""
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    prev = 1
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        pr = aug[c]
        piv = pr[c]
        for i in range(n):
            if i == c:
                continue
            row = aug[i]
            lead = row[c]
            aug[i] = [(piv * x - lead * y) // prev for x, y in zip(row, pr)]
        prev = piv
    # left block is now prev * identity
    if prev < 0:
        return [[-x for x in row[n:]] for row in aug], -prev
    return [row[n:] for row in aug], prev


class SpanSolver:
    """Precomputed coordinates with respect to a basis of independent columns.

    Picks a set of rows on which the basis is invertible, inverts that square
    block once, and then every target is solved by one matrix-vector product
    followed by an exact membership check. Internally all work is done on
    integers: basis columns are scaled to integers and the inverse block is
    kept as an integer matrix over a common denominator.
    """

    def __init__(self, basis: Matrix):
        self.basis = basis
        rows = pivot_columns(basis.transpose())
        if len(rows) != basis.cols:
            raise DependentBasis(
                f"{basis.cols} columns but rank {len(rows)}"
            )
        self.pivot_rows = rows
        cols = basis.to_columns()
        self._col_scale = [lcm(*(x.denominator for x in c)) if c else 1 for c in cols]
        int_cols = [[int(x * s) for x in c] for c, s in zip(cols, self._col_scale)]
        self._int_rows = [list(r) for r in zip(*int_cols)] if int_cols else []
        block = [self._int_rows[i] for i in rows]
        self._inv, self._den = _integer_inverse(block) if block else ([], 1)

    def _integer_target(self, target: Sequence) -> tuple[list[int], int]:
        target = to_vector(target)
        if len(target) != self.basis.rows:
            raise DimensionMismatch(
                f"target of length {len(target)} for {self.basis.rows} rows"
            )
        tden = lcm(*(x.denominator for x in target)) if target else 1
        return [int(x * tden) for x in target], tden

    def _scaled(self, t: list[int]) -> list[int]:
        sub = [t[i] for i in self.pivot_rows]
        return [sum(x * y for x, y in zip(row, sub) if x and y) for row in self._inv]

    def coordinates(self, target: Sequence) -> Vector:
        t, tden = self._integer_target(target)
        # scaled basis times c equals den * t
        c = self._scaled(t)
        for i, brow in enumerate(self._int_rows):
            if sum(x * y for x, y in zip(brow, c) if x and y) != self._den * t[i]:
                raise NotInSpan(f"target disagrees with span at row {i}")
        scale = self._den * tden
        return tuple(Fraction(cj * s, scale) for cj, s in zip(c, self._col_scale))

    def coordinate(self, target: Sequence, j: int) -> Fraction:
        """Coordinate ``j`` of a target already known to lie in the span.

        Only the pivot rows are read; membership is not checked.
        """
        t, tden = self._integer_target(target)
        sub = [t[i] for i in self.pivot_rows]
        cj = sum(x * y for x, y in zip(self._inv[j], sub) if x and y)
        return Fraction(cj * self._col_scale[j], self._den * tden)


def solve_in_span(basis: Matrix, target: Sequence) -> Vector:
    """Return ``c`` with ``basis @ c == target``.

    Raises :class:`DependentBasis` when the columns are not independent and
    :class:`NotInSpan` when ``target`` is outside their span.
    """
    return SpanSolver(basis).coordinates(target)
