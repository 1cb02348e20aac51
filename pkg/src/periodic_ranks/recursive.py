"""Constant-recursive rank of periodic sequences and its muggle numbers.

The minimal recurrence of a sequence of period length ``ell`` has a
characteristic polynomial dividing ``x**ell - 1``, hence a product of
distinct cyclotomic polynomials ``Phi_m`` with ``m | ell``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .linalg import circulant_rank
from .numtheory import (IntPolynomial, additive_psi, cyclotomic_product, divisors,
                        euler_phi, lcm)
from .sequences import PeriodicSequence, minimal_period_length


@dataclass(frozen=True)
class Recurrence:
    """``s(n + d) = c[d-1] s(n + d - 1) + ... + c[0] s(n)`` with ``c[0] != 0``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise DomainError("a recurrence needs order >= 1")
        if coeffs[0] == 0:
            raise DomainError("the constant coefficient c_0 of a recurrence must be nonzero")

    @classmethod
    def from_char_poly(cls, p: IntPolynomial) -> Recurrence:
        if p.degree < 1 or not p.is_monic():
            raise DomainError(f"characteristic polynomial must be monic of degree >= 1, got {p}")
        return cls(tuple(-a for a in p.coeffs[:-1]))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def char_poly(self) -> IntPolynomial:
        if any(c.denominator != 1 for c in self.coeffs):
            raise DomainError("characteristic polynomial has non-integer coefficients")
        return IntPolynomial(tuple(-int(c) for c in self.coeffs) + (1,))


def unroll(rec: Recurrence, initial: Sequence[int], count: int) -> tuple[int, ...]:
    """First ``count`` terms of the sequence with the given initial terms."""
    d = rec.order
    if len(initial) != d:
        raise DomainError(f"need {d} initial terms, got {len(initial)}")
    if count < d:
        raise DomainError(f"count must be at least the order {d}, got {count}")
    terms = [Fraction(v) for v in initial]
    coeffs = rec.coeffs
    for n in range(count - d):
        terms.append(sum(c * terms[n + i] for i, c in enumerate(coeffs)))
    if any(t.denominator != 1 for t in terms):
        raise DomainError("recurrence produced non-integer terms")
    return tuple(int(t) for t in terms)


def rank_cr(s: PeriodicSequence) -> int:
    """Constant-recursive rank, computed as the rank of the period's circulant."""
    return circulant_rank(s.period)


def annihilates(p: IntPolynomial, period: Sequence[int]) -> bool:
    """Whether ``sum_i p_i s(n + i) = 0`` for ``2 * ell`` consecutive ``n``."""
    ell = len(period)
    coeffs = p.coeffs
    return all(
        sum(a * period[(n + i) % ell] for i, a in enumerate(coeffs) if a) == 0
        for n in range(2 * ell))


def cyclotomic_support(s: PeriodicSequence) -> tuple[int, ...]:
    """Indices ``m`` with ``Phi_m`` dividing the minimal characteristic polynomial.

    Greedy: start from all divisors of ``ell`` (that is, ``x**ell - 1``) and
    drop each ``Phi_m`` whose removal still annihilates ``s``, in decreasing
    order of ``phi(m)``. Annihilators dividing ``x**ell - 1`` are closed
    under gcd, so the result is the unique minimal one.
    """
    ell = s.ell
    keep = set(divisors(ell))
    for m in sorted(keep, key=lambda m: (euler_phi(m), m), reverse=True):
        trial = keep - {m}
        if annihilates(cyclotomic_product(trial), s.period):
            keep = trial
    return tuple(sorted(keep))


def minimal_char_poly(s: PeriodicSequence) -> IntPolynomial:
    return cyclotomic_product(cyclotomic_support(s))


def witness_cr(divisor_set: Iterable[int], ell: int | None = None) -> PeriodicSequence:
    """Impulse response of ``prod Phi_d``: period ``lcm``, rank ``sum phi(d)``."""
    divs = list(divisor_set)
    if not divs:
        raise DomainError("divisor set must be non-empty")
    if len(set(divs)) != len(divs):
        raise DomainError(f"divisor set {divs} has duplicates")
    if any(d < 1 for d in divs):
        raise DomainError(f"divisor set {divs} must contain positive integers")
    target = lcm(divs)
    if ell is not None and target != ell:
        raise DomainError(f"lcm{tuple(sorted(divs))} = {target}, not {ell}")
    if target < 2:
        raise DomainError("divisor set must have lcm >= 2")
    chi = cyclotomic_product(divs)
    degree = chi.degree
    terms = unroll(Recurrence.from_char_poly(chi), (0,) * (degree - 1) + (1,), 2 * target)
    period = terms[:target]
    if terms[target:] != period or minimal_period_length(period) != target:
        raise AssertionError(f"impulse response of {chi} does not have period length {target}")
    s = PeriodicSequence(period)
    if rank_cr(s) != degree:
        raise AssertionError(f"witness {period} has rank {rank_cr(s)}, expected {degree}")
    return s


@dataclass(frozen=True)
class CrMuggleReport:
    ell: int
    range_lo: int
    range_hi: int
    muggles: tuple[int, ...]
    magics: tuple[int, ...]
    witnesses: dict[int, tuple[tuple[int, ...], PeriodicSequence]] = field(default_factory=dict)
    framework: str = "cr"
    k: int | None = None
    empirical: bool = False
    alphabet_size: int | None = None

    def to_dict(self, with_witnesses: bool = True) -> dict:
        if self.empirical:
            anchor = f"{self.framework} rank observed by exhaustive enumeration"
        else:
            anchor = "ranks are sums of phi(d_i) over divisor sets with lcm ell"
        out = {
            "framework": self.framework,
            "anchor": anchor,
            "k": self.k,
            "ell": self.ell,
            "empirical": self.empirical,
            "range": [self.range_lo, self.range_hi],
            "muggles": list(self.muggles),
            "magics": list(self.magics),
        }
        if self.empirical:
            out["alphabet_size"] = self.alphabet_size
        if with_witnesses:
            out["witnesses"] = {
                str(m): ({"divisors": list(divs), "period": list(w.period)} if divs
                         else {"period": list(w.period)})
                for m, (divs, w) in sorted(self.witnesses.items())
            }
        return out


def divisor_sets_by_rank(ell: int) -> dict[int, tuple[int, ...]]:
    """For each achievable ``sum phi(d_i)``, the preferred divisor set.

    Sets range over non-empty subsets of the divisors of ``ell`` with lcm
    ``ell``; the preferred one has fewest elements, then is lexicographically
    least. Dynamic programming over ``(lcm, sum)`` states keeps only the
    preferred set per state, which suffices because appending a larger
    divisor preserves that order.
    """
    if ell < 2:
        raise DomainError(f"ell must be >= 2, got {ell}")
    best: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {(1, 0): (0, ())}
    for d in divisors(ell):
        phi = euler_phi(d)
        updated = dict(best)
        for (m, total), (size, chosen) in best.items():
            key = (m * d // math.gcd(m, d), total + phi)
            cand = (size + 1, chosen + (d,))
            if key not in updated or cand < updated[key]:
                updated[key] = cand
        best = updated
    return {total: chosen for (m, total), (_, chosen) in sorted(best.items()) if m == ell}


def muggle_report_cr(ell: int) -> CrMuggleReport:
    if ell < 2:
        raise DomainError(f"magic-number queries need ell >= 2, got {ell}")
    sets = divisor_sets_by_rank(ell)
    muggles = tuple(sorted(sets))
    lo = additive_psi(ell)
    if muggles[0] != lo or muggles[-1] != ell:
        raise AssertionError(f"muggle range {muggles[0]}..{muggles[-1]} != {lo}..{ell}")
    witnesses = {}
    for total in muggles:
        w = witness_cr(sets[total], ell)
        if circulant_rank(w.period) != total:
            raise AssertionError(f"witness for {total} failed circulant check")
        witnesses[total] = (sets[total], w)
    return CrMuggleReport(
        ell=ell, range_lo=lo, range_hi=ell, muggles=muggles,
        magics=tuple(sorted(set(range(lo, ell + 1)) - set(muggles))),
        witnesses=witnesses)

