"""Exact integer matrices: fraction-free rank, circulants, companions, order."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .numtheory import IntPolynomial

DEFAULT_ORDER_CAP = 10**6


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows * self.cols:
            raise DomainError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), ncols, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DomainError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols_b = [other.entries[j::other.cols] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            a = self.row(i)
            out.extend(sum(x * y for x, y in zip(a, b)) for b in cols_b)
        return IntMatrix(self.rows, other.cols, tuple(out))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def rank_of_rows(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of the integer matrix with the given rows.

    Rows are inserted one at a time into an integer echelon basis. Each new
    row is cleared at every existing pivot column by integer row operations
    and then divided by the gcd of its entries, an exact division. Stops as
    soon as the basis spans every column.
    """
    basis: list[tuple[int, list[int]]] = []
    ncols = None
    for v in rows:
        v = list(v)
        if ncols is None:
            ncols = len(v)
        elif len(v) != ncols:
            raise DomainError("ragged rows")
        for j, b in basis:
            a = v[j]
            if a:
                p = b[j]
                v = [p * x - a * y for x, y in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        g = math.gcd(*v)
        if g > 1:
            v = [x // g for x in v]
        basis.append((lead, v))
        if len(basis) == ncols:
            break
    return len(basis)


def bareiss_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q by Bareiss elimination.

    Every intermediate entry is a minor of the input, so each division by
    the previous pivot is exact. The pivot is the first nonzero entry of the
    column, scanning downwards.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DomainError("ragged rows")
    nrows = len(m)
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        prow = m[r]
        p = prow[col]
        tail = prow[col + 1:]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[col]
            if a:
                m[i] = [0] * (col + 1) + [(p * x - a * y) // prev
                                          for x, y in zip(row[col + 1:], tail)]
            elif prev != p:
                m[i] = [0] * (col + 1) + [p * x // prev for x in row[col + 1:]]
        prev = p
        r += 1
    return r


def rank(m: IntMatrix) -> int:
    return bareiss_rank(m.row(i) for i in range(m.rows))


def circulant(values: Sequence[int]) -> IntMatrix:
    """Square matrix whose row ``i`` is ``values`` cyclically shifted right ``i`` times."""
    values = tuple(values)
    n = len(values)
    if n == 0:
        raise DomainError("circulant of an empty tuple")
    return IntMatrix(n, n, tuple(values[(j - i) % n] for i in range(n) for j in range(n)))


def circulant_rank(values: Sequence[int]) -> int:
    values = tuple(values)
    n = len(values)
    return rank_of_rows(values[n - i:] + values[:n - i] for i in range(n))


def companion(p: IntPolynomial) -> IntMatrix:
    """Companion matrix: ones on the subdiagonal, last column ``-a_0, ..., -a_{d-1}``."""
    if p.degree < 1 or not p.is_monic():
        raise DomainError(f"companion matrix needs a monic polynomial of degree >= 1, got {p}")
    d = p.degree
    entries = []
    for i in range(d):
        row = [0] * d
        if i:
            row[i - 1] = 1
        row[d - 1] = -p.coeffs[i]
        entries.extend(row)
    return IntMatrix(d, d, tuple(entries))


def matrix_order(m: IntMatrix, cap: int | None = None) -> int | None:
    """Smallest ``e`` in ``[1, cap]`` with ``m**e`` the identity, else ``None``."""
    if not m.is_square:
        raise DomainError(f"matrix order needs a square matrix, got {m.rows}x{m.cols}")
    if cap is None:
        cap = DEFAULT_ORDER_CAP
    ident = IntMatrix.identity(m.rows)
    power = m
    for e in range(1, cap + 1):
        if power == ident:
            return e
        power = power @ m
    return None
