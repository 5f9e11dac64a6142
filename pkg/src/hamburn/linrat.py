"""Exact rational matrices: reduced row echelon form and kernel directions.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator. Elimination runs fraction-free on integer rows
(each row scaled by the lcm of its denominators) and only the final result is
converted back to canonical fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from hamburn.errors import DimensionError

Rational = Fraction


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix shape")
        if len(self.entries) != self.rows:
            raise DimensionError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionError(f"expected {self.cols} columns, got {len(row)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: Optional[int] = None) -> "RatMatrix":
        """Build a matrix from nested iterables of ints/Fractions/strings.

        ``cols`` is only needed for a matrix with no rows.
        """
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if cols is None:
            if not entries:
                raise DimensionError("cols must be given for a matrix with no rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r][c]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def matvec(self, y: Sequence) -> tuple[Fraction, ...]:
        if len(y) != self.cols:
            raise DimensionError(f"vector of length {len(y)} for {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, y)), Fraction(0)) for row in self.entries)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = math.lcm(*(v.denominator for v in row)) if row else 1
    return [v.numerator * (den // v.denominator) for v in row]


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    if g > 1:
        return [v // g for v in row]
    return row


def _gauss_jordan(rows: list[list[int]], ncols: int, stop_at_free: bool = False):
    """Fraction-free Gauss-Jordan elimination in place.

    Returns ``(pivots, first_free)``. Pivot row ``r`` has its pivot at column
    ``pivots[r]`` and zeros in every other pivot column. With ``stop_at_free``
    the sweep ends at the lowest non-pivot column.
    """
    pivots: list[int] = []
    first_free = None
    nrows = len(rows)
    prow = 0
    for c in range(ncols):
        if prow == nrows:
            if first_free is None:
                first_free = c
            if stop_at_free:
                break
            continue
        sel = next((r for r in range(prow, nrows) if rows[r][c] != 0), None)
        if sel is None:
            if first_free is None:
                first_free = c
            if stop_at_free:
                break
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        p = rows[prow]
        if p[c] < 0:
            p = [-v for v in p]
        p = _primitive(p)
        rows[prow] = p
        a = p[c]
        for r in range(nrows):
            if r == prow:
                continue
            b = rows[r][c]
            if b == 0:
                continue
            rows[r] = _primitive([a * u - b * v for u, v in zip(rows[r], p)])
        pivots.append(c)
        prow += 1
    return pivots, first_free


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the ordered pivot columns (rank = len(pivots))."""
    rows = [_integer_row(row) for row in m.entries]
    pivots, _ = _gauss_jordan(rows, m.cols)
    out = []
    for r, row in enumerate(rows):
        if r < len(pivots):
            pv = row[pivots[r]]
            out.append(tuple(Fraction(v, pv) for v in row))
        else:
            out.append(tuple(Fraction(0) for _ in row))
    return RatMatrix(m.rows, m.cols, tuple(out)), pivots


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_vector(m: RatMatrix) -> Optional[tuple[Fraction, ...]]:
    """A nonzero y with m·y = 0, or None when the kernel is trivial.

    The lowest free column is set to 1, every other free column to 0, and
    the pivot entries are read off the reduced form. The lowest free column
    is at most ``rows``, so only the leading ``rows + 1`` columns are reduced.
    """
    width = min(m.cols, m.rows + 1)
    rows = [_integer_row(row[:width]) for row in m.entries]
    pivots, free = _gauss_jordan(rows, width, stop_at_free=True)
    if free is None:
        return None
    y = [Fraction(0)] * m.cols
    y[free] = Fraction(1)
    for r, pc in enumerate(pivots):
        if pc > free:
            break
        y[pc] = Fraction(-rows[r][free], rows[r][pc])
    return tuple(y)
