"""k-regular rank: dimension of the rational span of the k-kernel."""
from __future__ import annotations

import math

from .automatic import OPEN_PROBLEM, kernel
from .errors import DomainError, UnsupportedError
from .linalg import circulant_rank, rank_of_rows
from .recursive import CrMuggleReport, muggle_report_cr
from .sequences import PeriodicSequence


def rank_regular(s: PeriodicSequence, k: int) -> int:
    # ell-term value tuples coordinatize the span: every kernel sequence has
    # period dividing ell, so linear relations hold iff they hold on [0, ell).
    return rank_of_rows(e.values for e in kernel(s, k).elements)


def check_coprime_collapse(s: PeriodicSequence, k: int) -> bool:
    """Whether the k-regular rank equals the circulant rank (true when coprime)."""
    if math.gcd(k, s.ell) != 1:
        raise DomainError(f"k={k} and ell={s.ell} are not coprime")
    return rank_regular(s, k) == circulant_rank(s.period)


def muggle_report_regular(k: int, ell: int, empirical: bool = False,
                          alphabet_size: int | None = None,
                          budget: int | None = None) -> CrMuggleReport:
    """Achievable k-regular ranks for period length ``ell``.

    When ``gcd(k, ell) = 1`` these coincide with the constant-recursive
    ranks; each witness is rechecked with :func:`rank_regular`.
    """
    if k < 2:
        raise DomainError(f"base k must be >= 2, got {k}")
    if ell < 2:
        raise DomainError(f"magic-number queries need ell >= 2, got {ell}")
    if empirical:
        return _empirical_report(k, ell, alphabet_size or 3, budget)
    if math.gcd(k, ell) != 1:
        raise UnsupportedError(f"k={k} and ell={ell} are not coprime; " + OPEN_PROBLEM)
    base = muggle_report_cr(ell)
    for total, (_, w) in base.witnesses.items():
        got = rank_regular(w, k)
        if got != total:
            raise AssertionError(f"witness {w.period} has {k}-regular rank {got}, expected {total}")
    return CrMuggleReport(
        ell=ell, range_lo=base.range_lo, range_hi=base.range_hi, muggles=base.muggles,
        magics=base.magics, witnesses=base.witnesses, framework="regular", k=k)


def _empirical_report(k: int, ell: int, alphabet_size: int, budget: int | None) -> CrMuggleReport:
    from .oracle import enumerate_per

    witnesses: dict[int, tuple[tuple[int, ...], PeriodicSequence]] = {}
    for s in enumerate_per(ell, alphabet_size, budget=budget):
        witnesses.setdefault(rank_regular(s, k), ((), s))
    muggles = tuple(sorted(witnesses))
    lo, hi = muggles[0], muggles[-1]
    return CrMuggleReport(
        ell=ell, range_lo=lo, range_hi=hi, muggles=muggles,
        magics=tuple(sorted(set(range(lo, hi + 1)) - set(muggles))),
        witnesses=witnesses, framework="regular", k=k, empirical=True,
        alphabet_size=alphabet_size)
