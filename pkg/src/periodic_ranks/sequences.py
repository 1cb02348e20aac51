"""Purely periodic integer sequences stored by their minimal period."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError


def minimal_period_length(values: Sequence[int]) -> int:
    """Smallest ``d`` dividing ``len(values)`` such that ``values`` is ``d``-periodic."""
    n = len(values)
    if n == 0:
        raise DomainError("a period must contain at least one term")
    for d in range(1, n):
        if n % d == 0 and all(values[i] == values[i - d] for i in range(d, n)):
            return d
    return n


@dataclass(frozen=True)
class PeriodicSequence:
    """The sequence ``s(n) = period[n mod ell]``, with ``period`` minimal.

    Build instances with :func:`make_sequence` unless the period is already
    known to be minimal; the constructor rejects non-minimal periods.
    """

    period: tuple[int, ...]
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        period = tuple(int(v) for v in self.period)
        object.__setattr__(self, "period", period)
        if minimal_period_length(period) != len(period):
            raise DomainError(f"period {period} is not minimal; use make_sequence")

    @property
    def ell(self) -> int:
        return len(self.period)

    def __getitem__(self, n: int) -> int:
        return self.period[n % len(self.period)]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.period)

    def shift(self, j: int = 1) -> PeriodicSequence:
        j %= self.ell
        return PeriodicSequence(self.period[j:] + self.period[:j])


def make_sequence(raw_period: Sequence[int], strict: bool = False) -> PeriodicSequence:
    """Canonicalize ``raw_period`` to its minimal period.

    The returned sequence has ``reduced=True`` when the input was longer than
    necessary. With ``strict=True`` such input is rejected instead.
    """
    raw = tuple(int(v) for v in raw_period)
    d = minimal_period_length(raw)
    if d != len(raw) and strict:
        raise DomainError(
            f"period {raw} is not minimal (minimal period length {d})")
    return PeriodicSequence(raw[:d], reduced=d != len(raw))


def parse_period(text: str) -> tuple[int, ...]:
    """Parse the comma-separated period format, e.g. ``"0,1,2,3,4,5"``."""
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(p == "" for p in parts):
        raise DomainError(f"malformed period {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"malformed period {text!r}") from None


def term(s: PeriodicSequence, n: int) -> int:
    if n < 0:
        raise DomainError(f"term index must be non-negative, got {n}")
    return s.period[n % s.ell]


def subsequence(s: PeriodicSequence, c: int, r: int) -> PeriodicSequence:
    """The sequence ``s(c*n + r)`` for ``n >= 0``.

    Its period length divides ``ell / gcd(c, ell)``, so that many terms
    determine it.
    """
    if c < 0 or r < 0:
        raise DomainError(f"c and r must be non-negative, got c={c}, r={r}")
    ell = s.ell
    span = ell // math.gcd(c, ell)
    return make_sequence(tuple(s.period[(c * n + r) % ell] for n in range(span)))
