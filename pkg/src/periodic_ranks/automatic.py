"""Base-k kernels, minimal automata with output, and automatic-rank reports.

A kernel element ``s(c*n + r)`` of a sequence with period length ``ell`` has
period length dividing ``ell``, so its first ``ell`` terms identify it.
"""
from __future__ import annotations

import json
import math
from operator import itemgetter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, UnsupportedError
from .numtheory import divisors, ord_pre
from .sequences import PeriodicSequence, make_sequence

OPEN_PROBLEM = (
    "no closed-form characterization is known when k and ell are not coprime; "
    "rerun with empirical mode to enumerate achievable ranks")


def _require_base(k: int) -> None:
    if k < 2:
        raise DomainError(f"base k must be >= 2, got {k}")


@dataclass(frozen=True)
class KernelElement:
    """The subsequence ``s(c*n + r)``; equality is by values only."""

    c: int = field(compare=False)
    r: int = field(compare=False)
    values: tuple[int, ...]

    def as_sequence(self) -> PeriodicSequence:
        return make_sequence(self.values)


def _element(period: Sequence[int], c: int, r: int) -> KernelElement:
    ell = len(period)
    return KernelElement(c, r, tuple([period[(c * n + r) % ell] for n in range(ell)]))


@dataclass(frozen=True)
class Kernel:
    base: PeriodicSequence
    k: int
    elements: tuple[KernelElement, ...]
    transitions: tuple[tuple[int, ...], ...]
    initial: int = 0

    def __len__(self) -> int:
        return len(self.elements)

    def value_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(e.values for e in self.elements)

    def to_dict(self) -> dict:
        return {
            "period": list(self.base.period),
            "ell": self.base.ell,
            "k": self.k,
            "size": len(self.elements),
            "initial": self.initial,
            "elements": [
                {"c": e.c, "r": e.r, "period": list(e.as_sequence().period)}
                for e in self.elements
            ],
            "transitions": [list(t) for t in self.transitions],
        }


def kernel(s: PeriodicSequence, k: int) -> Kernel:
    """Breadth-first closure of ``s`` under ``t(n) -> t(k*n + d)``.

    On representatives, digit ``d`` maps ``(c, r)`` to
    ``(c*k mod ell, (c*d + r) mod ell)``.
    """
    _require_base(k)
    period = s.period
    ell = len(period)
    # s(c*n + r) for n < ell is rotations[r] read at the positions c*n mod ell.
    rotations = [period[r:] + period[:r] for r in range(ell)]
    pickers: dict[int, itemgetter] = {}
    start = _element(period, 1 % ell, 0)
    index = {start.values: 0}
    elements = [start]
    transitions: list[tuple[int, ...]] = []
    by_rep: dict[tuple[int, int], int] = {(start.c, start.r): 0}
    i = 0
    while i < len(elements):
        c, r = elements[i].c, elements[i].r
        c_next = c * k % ell
        row = []
        for d in range(k):
            rep = (c_next, (c * d + r) % ell)
            target = by_rep.get(rep)
            if target is None:
                cc, rr = rep
                pick = pickers.get(cc)
                if pick is None:
                    pick = pickers[cc] = itemgetter(*[cc * n % ell for n in range(ell)])
                values = pick(rotations[rr]) if ell > 1 else (rotations[rr][0],)
                target = index.get(values)
                if target is None:
                    target = len(elements)
                    index[values] = target
                    elements.append(KernelElement(cc, rr, values))
                by_rep[rep] = target
            row.append(target)
        transitions.append(tuple(row))
        i += 1
    return Kernel(s, k, tuple(elements), tuple(transitions), 0)


def rank_automatic(s: PeriodicSequence, k: int) -> int:
    return len(kernel(s, k))


def funnel_basin(s: PeriodicSequence, k: int) -> tuple[frozenset[KernelElement], frozenset[KernelElement]]:
    """Split the kernel into the small-exponent funnel and the periodic basin.

    Funnel: ``s(k**e n + j)`` for ``e < pre`` and ``j < min(k**e, ell)``.
    Basin: ``s(k**e n + j)`` for ``pre <= e < pre + ord`` and ``j < ell``.
    """
    _require_base(k)
    ell = s.ell
    if ell == 1:
        return frozenset(), frozenset({_element(s.period, 0, 0)})
    op = ord_pre(k, ell)
    funnel = set()
    for e in range(op.pre):
        c = pow(k, e, ell)
        for j in range(min(k**e, ell)):
            funnel.add(_element(s.period, c, j % ell))
    basin = set()
    for e in range(op.pre, op.pre + op.ord):
        c = pow(k, e, ell)
        for j in range(ell):
            basin.add(_element(s.period, c, j))
    return frozenset(funnel), frozenset(basin)


def bound_B(k: int, ell: int) -> int:
    """Largest possible k-rank over sequences of period length ``ell``."""
    op = ord_pre(k, ell)
    return sum(min(k**e, ell) for e in range(op.pre)) + ell * op.ord


def digits_lsd(n: int, k: int) -> list[int]:
    """Base-``k`` digits of ``n``, least significant first; empty for zero."""
    out = []
    while n:
        n, d = divmod(n, k)
        out.append(d)
    return out


@dataclass(frozen=True)
class Dfao:
    """Deterministic automaton with output reading base-k digits LSD first."""

    outputs: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    base_k: int
    names: tuple[str, ...] = ()

    @property
    def num_states(self) -> int:
        return len(self.outputs)

    def run(self, digits: Sequence[int]) -> int:
        state = self.initial
        for d in digits:
            state = self.transitions[state][d]
        return self.outputs[state]

    def evaluate(self, n: int) -> int:
        return self.run(digits_lsd(n, self.base_k))

    def state_name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def to_dict(self) -> dict:
        return {
            "base_k": self.base_k,
            "initial": self.initial,
            "states": [
                {"name": self.state_name(i), "output": out, "next": list(self.transitions[i])}
                for i, out in enumerate(self.outputs)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph dfao {", "  rankdir=LR;", '  __start [shape=point];']
        for i, out in enumerate(self.outputs):
            label = f"{self.state_name(i)}/{out}"
            lines.append(f'  s{i} [shape=circle, label="{label}"];')
        lines.append(f"  __start -> s{self.initial};")
        for i, row in enumerate(self.transitions):
            for d, j in enumerate(row):
                lines.append(f'  s{i} -> s{j} [label="{d}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_dfao(s: PeriodicSequence, k: int) -> Dfao:
    ker = kernel(s, k)
    return Dfao(
        outputs=tuple(e.values[0] for e in ker.elements),
        transitions=ker.transitions,
        initial=ker.initial,
        base_k=k,
        names=tuple(f"{e.c},{e.r}" for e in ker.elements),
    )


def state_partition(dfao: Dfao) -> list[int]:
    """Moore partition refinement; returns a class id per state.

    Two states share a class iff no digit string separates their outputs.
    """
    classes = _relabel(dfao.outputs)
    while True:
        signature = [(classes[i],) + tuple(classes[j] for j in dfao.transitions[i])
                     for i in range(dfao.num_states)]
        refined = _relabel(signature)
        if max(refined, default=-1) == max(classes, default=-1):
            return refined
        classes = refined


def _relabel(keys: Sequence) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(key, len(ids)) for key in keys]


def is_minimal(dfao: Dfao) -> bool:
    return len(set(state_partition(dfao))) == dfao.num_states


def orbit_partition(k: int, ell: int, d: int) -> list[list[int]]:
    """Orbits of ``n -> k**d * n`` on ``Z/ell``, ordered by least element."""
    mult = pow(k, d, ell)
    seen = [False] * ell
    orbits = []
    for start in range(ell):
        if seen[start]:
            continue
        orbit, n = [], start
        while not seen[n]:
            seen[n] = True
            orbit.append(n)
            n = n * mult % ell
        orbits.append(sorted(orbit))
    return orbits


def witness_automatic(k: int, ell: int, d: int) -> PeriodicSequence:
    """A sequence of period length ``ell`` with k-rank ``d * ell``.

    ``s(n)`` is the index of the orbit of ``n mod ell`` under multiplication
    by ``k**d``; orbit 0 is ``{0}``.
    """
    _require_base(k)
    if math.gcd(k, ell) != 1:
        raise UnsupportedError(f"k={k} and ell={ell} are not coprime; " + OPEN_PROBLEM)
    order = ord_pre(k, ell).ord
    if d < 1 or order % d:
        raise DomainError(f"d={d} does not divide ord_{ell}({k})={order}")
    period = [0] * ell
    for idx, orbit in enumerate(orbit_partition(k, ell, d)):
        for n in orbit:
            period[n] = idx
    return PeriodicSequence(tuple(period))


@dataclass(frozen=True)
class AutomaticMuggleReport:
    k: int
    ell: int
    coprime: bool
    range_lo: int
    range_hi: int
    muggles: tuple[int, ...]
    magics: tuple[int, ...]
    witnesses: dict[int, PeriodicSequence]
    empirical: bool = False
    alphabet_size: int | None = None

    def to_dict(self, with_witnesses: bool = True) -> dict:
        out = {
            "framework": "automatic",
            "anchor": ("automatic rank observed by exhaustive enumeration" if self.empirical
                       else "coprime automatic ranks are d*ell for d dividing ord_ell(k)"),
            "k": self.k,
            "ell": self.ell,
            "coprime": self.coprime,
            "empirical": self.empirical,
            "range": [self.range_lo, self.range_hi],
            "muggles": list(self.muggles),
            "magics": list(self.magics),
        }
        if self.empirical:
            out["alphabet_size"] = self.alphabet_size
        if with_witnesses:
            out["witnesses"] = {str(m): list(w.period) for m, w in sorted(self.witnesses.items())}
        return out


def muggle_report_automatic(k: int, ell: int, empirical: bool = False,
                            alphabet_size: int | None = None,
                            budget: int | None = None) -> AutomaticMuggleReport:
    """Achievable k-ranks over sequences with period length exactly ``ell``.

    For coprime ``(k, ell)`` the ranks are ``d*ell`` for ``d`` dividing
    ``ord_ell(k)``, each witnessed by :func:`witness_automatic`. Otherwise
    only ``empirical`` mode is available: ranks are collected by exhaustive
    enumeration over ``alphabet_size`` symbols.
    """
    _require_base(k)
    if ell < 2:
        raise DomainError(f"magic-number queries need ell >= 2, got {ell}")
    coprime = math.gcd(k, ell) == 1
    if empirical:
        return _empirical_report(k, ell, coprime, alphabet_size or ell, budget)
    if not coprime:
        raise UnsupportedError(f"k={k} and ell={ell} are not coprime; " + OPEN_PROBLEM)
    order = ord_pre(k, ell).ord
    muggles = tuple(d * ell for d in divisors(order))
    witnesses = {}
    for d in divisors(order):
        w = witness_automatic(k, ell, d)
        got = rank_automatic(w, k)
        if got != d * ell:
            raise AssertionError(f"witness {w.period} has rank {got}, expected {d * ell}")
        witnesses[d * ell] = w
    lo, hi = ell, ell * order
    return AutomaticMuggleReport(
        k=k, ell=ell, coprime=True, range_lo=lo, range_hi=hi, muggles=muggles,
        magics=tuple(sorted(set(range(lo, hi + 1)) - set(muggles))),
        witnesses=witnesses)


def _empirical_report(k: int, ell: int, coprime: bool, alphabet_size: int,
                      budget: int | None) -> AutomaticMuggleReport:
    from .oracle import enumerate_per, relabel_canonical

    witnesses: dict[int, PeriodicSequence] = {}
    cache: dict[tuple[int, ...], int] = {}
    for s in enumerate_per(ell, alphabet_size, budget=budget):
        key = relabel_canonical(s.period)
        rk = cache.get(key)
        if rk is None:
            rk = cache[key] = rank_automatic(s, k)
        witnesses.setdefault(rk, s)
    muggles = tuple(sorted(witnesses))
    lo, hi = muggles[0], muggles[-1]
    return AutomaticMuggleReport(
        k=k, ell=ell, coprime=coprime, range_lo=lo, range_hi=hi, muggles=muggles,
        magics=tuple(sorted(set(range(lo, hi + 1)) - set(muggles))),
        witnesses=witnesses, empirical=True, alphabet_size=alphabet_size)

