"""Brute-force cross-checks, independent of the fast rank paths.

Nothing here calls the BFS kernel or the Bareiss rank: the kernel is read
off its defining index ranges and the constant-recursive rank is found by
trying every recurrence order with its own integer row reduction.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from sympy.utilities.iterables import necklaces

from .errors import DomainError, ResourceError
from .numtheory import ord_pre
from .sequences import PeriodicSequence, minimal_period_length

DEFAULT_BUDGET = 10**7
DEFAULT_DEADLINE = 30.0
BRUTEFORCE_MAX_ELL = 16
FRAMEWORKS = ("automatic", "cr", "regular")


def enumerate_per(ell: int, alphabet_size: int,
                  budget: int | None = DEFAULT_BUDGET) -> Iterator[PeriodicSequence]:
    """Every tuple over ``{0, ..., alphabet_size - 1}`` with minimal period ``ell``."""
    if ell < 1 or alphabet_size < 1:
        raise DomainError(f"need ell >= 1 and alphabet_size >= 1, got {ell}, {alphabet_size}")
    required = alphabet_size**ell
    if budget is not None and required > budget:
        raise ResourceError(
            f"enumerating {alphabet_size}^{ell} = {required} tuples exceeds budget {budget}",
            required=required)
    for values in itertools.product(range(alphabet_size), repeat=ell):
        if minimal_period_length(values) == ell:
            yield PeriodicSequence(values)


def enumerate_per_up_to_rotation(ell: int, alphabet_size: int,
                                  budget: int | None = DEFAULT_BUDGET) -> Iterator[PeriodicSequence]:
    """One representative (the least rotation) per rotation class of ``Per(ell)``.

    A tuple with minimal period ``ell`` has exactly ``ell`` distinct rotations,
    so each representative stands for ``ell`` sequences of the full stream.
    """
    if ell < 1 or alphabet_size < 1:
        raise DomainError(f"need ell >= 1 and alphabet_size >= 1, got {ell}, {alphabet_size}")
    required = alphabet_size**ell
    if budget is not None and required > budget:
        raise ResourceError(
            f"enumerating {alphabet_size}^{ell} = {required} tuples exceeds budget {budget}",
            required=required)
    for word in necklaces(ell, alphabet_size):
        if minimal_period_length(word) == ell:
            yield PeriodicSequence(tuple(word))


def relabel_canonical(values: Sequence[int]) -> tuple[int, ...]:
    """Rename symbols in order of first appearance: ``(5, 2, 5) -> (0, 1, 0)``."""
    names: dict[int, int] = {}
    return tuple(names.setdefault(v, len(names)) for v in values)


def kernel_by_index_ranges(s: PeriodicSequence, k: int) -> frozenset[tuple[int, ...]]:
    """Value tuples of ``s(k**e n + j)`` over the funnel and basin index ranges.

    Funnel: ``e < pre`` and ``j < min(k**e, ell)``. Basin: ``pre <= e < pre + ord``
    and every ``j < ell``, since ``k**(e + t*ord)`` eventually exceeds ``ell``
    while staying congruent to ``k**e``.
    """
    if k < 2:
        raise DomainError(f"base k must be >= 2, got {k}")
    ell = s.ell
    period = s.period
    if ell == 1:
        return frozenset({period})
    op = ord_pre(k, ell)
    out = set()
    for e in range(op.pre + op.ord):
        step = k**e
        for j in range(min(step, ell) if e < op.pre else ell):
            out.add(tuple(period[(step * n + j) % ell] for n in range(ell)))
    return frozenset(out)


def rank_automatic_bruteforce(s: PeriodicSequence, k: int) -> int:
    return len(kernel_by_index_ranges(s, k))


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Gauss-Jordan elimination on ``Fraction`` entries."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    r = 0
    for col in range(len(m[0])):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def rank_regular_bruteforce(s: PeriodicSequence, k: int) -> int:
    return rational_rank(sorted(kernel_by_index_ranges(s, k)))


def _order_works(period: Sequence[int], d: int) -> bool:
    """Is there ``c`` with ``c_0 != 0`` and ``s(n+d) = sum c_i s(n+i)`` on ``2*ell`` terms?

    Columns are ordered ``c_1, ..., c_{d-1}, c_0, rhs`` and reduced to echelon
    form over the integers. The system is inconsistent iff some row leads in
    the rhs column; ``c_0`` is pinned iff some row leads in its column, and
    then it is pinned to zero iff that row's rhs is zero.
    """
    ell = len(period)
    ext = tuple(period) * 3
    # Rows for n and n + ell coincide, so n < ell covers all 2 * ell equations.
    rows = [list(e) for e in {ext[n + 1:n + d] + (ext[n], ext[n + d]) for n in range(ell)}]
    r = 0
    pinned_to_zero = False
    for col in range(d + 1):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        if col == d:
            return False
        if col == d - 1:
            pinned_to_zero = prow[d] == 0
        p = prow[col]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            a = row[col]
            if a:
                row = [p * x - a * y for x, y in zip(row, prow)]
                g = math.gcd(*row)
                if g > 1:
                    row = [v // g for v in row]
                rows[i] = row
        r += 1
    return not pinned_to_zero


def rank_cr_bruteforce(s: PeriodicSequence) -> int:
    """Smallest recurrence order, found by trying ``d = 0, 1, 2, ...``."""
    ell = s.ell
    if ell > BRUTEFORCE_MAX_ELL:
        raise ResourceError(f"rank_cr_bruteforce is limited to ell <= {BRUTEFORCE_MAX_ELL}")
    if not any(s.period):
        return 0
    for d in range(1, ell + 1):
        if _order_works(s.period, d):
            return d
    raise AssertionError(f"{s.period} satisfies no recurrence of order <= {ell}")


@dataclass(frozen=True)
class DiffReport:
    framework: str
    k: int | None
    ell: int
    alphabet_size: int
    observed_ranks: dict[int, int]
    predicted_muggles: tuple[int, ...] | None
    soundness_violations: tuple[int, ...]
    unrealized_muggles: tuple[int, ...]
    witness_closures: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def empirical(self) -> bool:
        return self.predicted_muggles is None

    @property
    def passed(self) -> bool:
        closed = set(self.witness_closures)
        return not self.soundness_violations and closed >= set(self.unrealized_muggles)

    def to_dict(self) -> dict:
        return {
            "framework": self.framework,
            "k": self.k,
            "ell": self.ell,
            "alphabet_size": self.alphabet_size,
            "observed_ranks": {str(r): c for r, c in sorted(self.observed_ranks.items())},
            "predicted_muggles": (None if self.predicted_muggles is None
                                  else list(self.predicted_muggles)),
            "soundness_violations": list(self.soundness_violations),
            "unrealized_muggles": list(self.unrealized_muggles),
            "witness_closures": {str(r): list(p) for r, p in sorted(self.witness_closures.items())},
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _rank_function(framework: str, k: int | None):
    from .automatic import rank_automatic
    from .recursive import rank_cr
    from .regular import rank_regular

    if framework == "automatic":
        return lambda s: rank_automatic(s, k)
    if framework == "regular":
        return lambda s: rank_regular(s, k)
    return rank_cr


def _rotation_invariant(framework: str, k: int | None, ell: int) -> bool:
    # The cr rank is a circulant rank. When gcd(k, ell) = 1 the kernel is
    # {s(c*n + j) : c a power of k, j < ell}, which every rotation of s shares.
    return framework == "cr" or math.gcd(k, ell) == 1


def _predicted_report(framework: str, k: int | None, ell: int):
    from .automatic import muggle_report_automatic
    from .recursive import muggle_report_cr
    from .regular import muggle_report_regular

    if framework == "cr":
        return muggle_report_cr(ell)
    if math.gcd(k, ell) != 1:
        return None
    if framework == "automatic":
        return muggle_report_automatic(k, ell)
    return muggle_report_regular(k, ell)


def observed_ranks(framework: str, k: int | None, ell: int, alphabet_size: int,
                   budget: int | None = DEFAULT_BUDGET,
                   deadline: float | None = DEFAULT_DEADLINE,
                   use_symmetry: bool = True) -> Counter:
    """Multiset of ranks over every sequence in ``enumerate_per(ell, alphabet_size)``.

    With ``use_symmetry``, rotation-invariant ranks are computed once per
    rotation class and automatic ranks once per relabeling class.
    """
    rank_of = _rank_function(framework, k)
    if use_symmetry and _rotation_invariant(framework, k, ell):
        stream = enumerate_per_up_to_rotation(ell, alphabet_size, budget=budget)
        weight = ell
    else:
        stream = enumerate_per(ell, alphabet_size, budget=budget)
        weight = 1
    key_of = relabel_canonical if use_symmetry and framework == "automatic" else None
    cache: dict[tuple[int, ...], int] = {}
    counts: Counter = Counter()
    start = time.monotonic()
    for i, s in enumerate(stream):
        if deadline is not None and i % 2048 == 0 and time.monotonic() - start > deadline:
            raise ResourceError(
                f"{framework} enumeration for ell={ell}, alphabet {alphabet_size} "
                f"passed its {deadline}s deadline")
        if key_of is None:
            rk = rank_of(s)
        else:
            key = key_of(s.period)
            rk = cache.get(key)
            if rk is None:
                rk = cache[key] = rank_of(s)
        counts[rk] += weight
    return counts


def diff_report(framework: str, k: int | None, ell: int, alphabet_size: int,
                budget: int | None = DEFAULT_BUDGET,
                deadline: float | None = DEFAULT_DEADLINE,
                use_symmetry: bool = True) -> DiffReport:
    """Compare enumerated ranks against the closed-form muggle set.

    Soundness violations are observed ranks outside the prediction. Predicted
    ranks that small alphabets miss are closed by the constructive witnesses,
    each rechecked with the framework's rank function.
    """
    if framework not in FRAMEWORKS:
        raise DomainError(f"unknown framework {framework!r}; expected one of {FRAMEWORKS}")
    if framework == "cr":
        k = None
    elif k is None or k < 2:
        raise DomainError(f"framework {framework!r} needs a base k >= 2")
    if ell < 2:
        raise DomainError(f"ell must be >= 2, got {ell}")
    counts = observed_ranks(framework, k, ell, alphabet_size, budget, deadline, use_symmetry)
    report = _predicted_report(framework, k, ell)
    if report is None:
        return DiffReport(framework, k, ell, alphabet_size, dict(counts), None, (), ())
    predicted = set(report.muggles)
    observed = set(counts)
    unrealized = tuple(sorted(predicted - observed))
    rank_of = _rank_function(framework, k)
    closures = {}
    for m in unrealized:
        w = report.witnesses[m]
        w = w[1] if isinstance(w, tuple) else w
        if rank_of(w) == m:
            closures[m] = w.period
    return DiffReport(
        framework, k, ell, alphabet_size, dict(counts),
        predicted_muggles=tuple(sorted(predicted)),
        soundness_violations=tuple(sorted(observed - predicted)),
        unrealized_muggles=unrealized,
        witness_closures=closures)
