import itertools
import json

import pytest

from periodic_ranks.automatic import kernel, rank_automatic
from periodic_ranks.errors import DomainError, ResourceError
from periodic_ranks.oracle import (DiffReport, diff_report, enumerate_per,
                                   enumerate_per_up_to_rotation, kernel_by_index_ranges,
                                   observed_ranks, rank_automatic_bruteforce, rank_cr_bruteforce,
                                   relabel_canonical)
from periodic_ranks.recursive import rank_cr
from periodic_ranks.sequences import PeriodicSequence, minimal_period_length


def mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def count_per(ell, a):
    # tuples of minimal period exactly ell, by Mobius inversion
    return sum(mobius(ell // d) * a**d for d in range(1, ell + 1) if ell % d == 0)


def test_enumerate_per_examples():
    assert {s.period for s in enumerate_per(2, 2)} == {(0, 1), (1, 0)}
    assert sum(1 for _ in enumerate_per(3, 2)) == 6
    assert sum(1 for _ in enumerate_per(4, 2)) == 12


def test_enumerate_per_counts():
    for ell in range(1, 9):
        for a in range(1, 4):
            seqs = list(enumerate_per(ell, a))
            assert len(seqs) == count_per(ell, a)
            assert all(s.ell == ell for s in seqs)
            assert len({s.period for s in seqs}) == len(seqs)


def test_enumerate_per_budget():
    with pytest.raises(ResourceError) as info:
        next(enumerate_per(10, 4, budget=1000))
    assert info.value.required == 4**10
    with pytest.raises(DomainError):
        next(enumerate_per(0, 2))


def test_rotation_representatives_cover_every_class():
    for ell in range(1, 9):
        for a in range(2, 4):
            reps = list(enumerate_per_up_to_rotation(ell, a))
            assert len(reps) * ell == count_per(ell, a)
            everything = {s.period for s in enumerate_per(ell, a)}
            covered = {r.period[i:] + r.period[:i] for r in reps for i in range(ell)}
            assert covered == everything


def test_relabel_canonical():
    assert relabel_canonical((5, 2, 5)) == (0, 1, 0)
    assert relabel_canonical((1, 0, 2, 0)) == (0, 1, 2, 1)


@pytest.mark.parametrize("period, expected", [((-1, 0, 1), 2), ((0, 1), 2), ((9,), 1),
                                              ((0,), 0)])
def test_rank_cr_bruteforce_examples(period, expected):
    assert rank_cr_bruteforce(PeriodicSequence(period)) == expected


def test_rank_cr_bruteforce_cost_guard():
    with pytest.raises(ResourceError):
        rank_cr_bruteforce(PeriodicSequence(tuple(range(17))))


def test_rank_cr_bruteforce_matches_circulant_rank():
    for ell in range(1, 9):
        for a in range(1, 4):
            for s in enumerate_per(ell, a):
                assert rank_cr_bruteforce(s) == rank_cr(s), s.period


def test_kernel_definitional_check():
    for ell in range(1, 11):
        alphabet = 3 if ell <= 7 else 2
        for values in itertools.product(range(alphabet), repeat=ell):
            if minimal_period_length(values) != ell:
                continue
            s = PeriodicSequence(values)
            for k in range(2, 6):
                assert kernel(s, k).value_set() == kernel_by_index_ranges(s, k), (values, k)


def test_rank_automatic_bruteforce_agrees():
    for s in enumerate_per(6, 3):
        assert rank_automatic_bruteforce(s, 2) == rank_automatic(s, 2)


def test_diff_report_automatic_table_case():
    r = diff_report("automatic", 3, 7, 7)
    assert r.passed
    assert r.soundness_violations == ()
    assert r.unrealized_muggles == ()
    assert set(r.observed_ranks) == {7, 14, 21, 42}
    assert sum(r.observed_ranks.values()) == count_per(7, 7)


def test_diff_report_cr_ell_6():
    r = diff_report("cr", None, 6, 3)
    assert r.predicted_muggles == (2, 3, 4, 5, 6)
    assert r.soundness_violations == ()
    assert r.passed


def test_diff_report_cr_ell_2_closure():
    r = diff_report("cr", None, 2, 2)
    assert set(r.observed_ranks) == {2}
    assert r.unrealized_muggles == (1,)
    assert r.witness_closures == {1: (1, -1)}
    assert r.passed


def test_diff_report_non_coprime_is_empirical():
    r = diff_report("automatic", 2, 4, 3)
    assert r.empirical and r.passed
    assert r.predicted_muggles is None
    assert sum(r.observed_ranks.values()) == count_per(4, 3)


def test_symmetry_reduction_preserves_counts():
    cases = [("cr", None, 6, 3), ("regular", 2, 7, 3), ("regular", 2, 6, 3),
             ("automatic", 3, 5, 4), ("automatic", 2, 6, 3)]
    for framework, k, ell, a in cases:
        fast = observed_ranks(framework, k, ell, a)
        slow = observed_ranks(framework, k, ell, a, use_symmetry=False)
        assert fast == slow, (framework, k, ell)


def test_diff_report_json_fields():
    data = json.loads(diff_report("regular", 3, 5, 3).to_json())
    assert set(data) == {"framework", "k", "ell", "alphabet_size", "observed_ranks",
                         "predicted_muggles", "soundness_violations", "unrealized_muggles",
                         "witness_closures", "passed"}
    assert list(data["observed_ranks"]) == sorted(data["observed_ranks"], key=int)


def test_soundness_violation_fails_report():
    bad = DiffReport("cr", None, 5, 2, {3: 10}, (4, 5), (3,), (4,), {4: (0,)})
    assert not bad.passed
    unclosed = DiffReport("cr", None, 5, 2, {5: 10}, (4, 5), (), (4,), {})
    assert not unclosed.passed


def test_diff_report_errors():
    with pytest.raises(DomainError):
        diff_report("bogus", 2, 5, 2)
    with pytest.raises(DomainError):
        diff_report("automatic", None, 5, 2)
    with pytest.raises(DomainError):
        diff_report("cr", None, 1, 2)
    with pytest.raises(ResourceError):
        diff_report("cr", None, 12, 4, budget=10**6)
    with pytest.raises(ResourceError):
        diff_report("cr", None, 8, 3, deadline=-1.0)
