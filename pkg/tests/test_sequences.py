import pytest
from hypothesis import given, strategies as st

from periodic_ranks.errors import DomainError
from periodic_ranks.sequences import (PeriodicSequence, make_sequence, minimal_period_length,
                                      parse_period, subsequence, term)


def brute_minimal_period(values):
    n = len(values)
    return min(d for d in range(1, n + 1)
               if n % d == 0 and all(values[i] == values[i % d] for i in range(n)))


@pytest.mark.parametrize("raw, period", [((0, 1, 0, 1), (0, 1)),
                                         ((0, 1, 2, 3, 4, 5), (0, 1, 2, 3, 4, 5)),
                                         ((5, 5, 5), (5,))])
def test_make_sequence_examples(raw, period):
    s = make_sequence(raw)
    assert s.period == period
    assert s.ell == len(period)
    assert s.reduced == (len(raw) != len(period))


def test_make_sequence_rejects_empty():
    with pytest.raises(DomainError):
        make_sequence(())


def test_strict_rejects_non_minimal():
    with pytest.raises(DomainError):
        make_sequence((0, 1, 0, 1), strict=True)
    assert make_sequence((0, 1, 2), strict=True).period == (0, 1, 2)


def test_constructor_rejects_non_minimal():
    with pytest.raises(DomainError):
        PeriodicSequence((3, 3))


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=12))
def test_minimal_period_matches_brute_force(values):
    assert minimal_period_length(values) == brute_minimal_period(values)
    s = make_sequence(values)
    assert all(s[n] == values[n] for n in range(len(values)))


@pytest.mark.parametrize("period, n, expected", [((0, 1, 2), 5, 2),
                                                 ((0, 1, 2, 3, 4, 5), 7, 1),
                                                 ((0, 0, 0, 0, 0, 0, 1), 13, 1)])
def test_term_examples(period, n, expected):
    assert term(PeriodicSequence(period), n) == expected


def test_term_rejects_negative_index():
    with pytest.raises(DomainError):
        term(PeriodicSequence((0, 1)), -1)


@pytest.mark.parametrize("c, r, expected", [(2, 0, (0, 2, 4)), (4, 1, (1, 5, 3)),
                                            (1, 0, (0, 1, 2, 3, 4, 5))])
def test_subsequence_examples(c, r, expected):
    assert subsequence(PeriodicSequence((0, 1, 2, 3, 4, 5)), c, r).period == expected


@given(st.lists(st.integers(0, 3), min_size=1, max_size=10), st.integers(0, 30),
       st.integers(0, 30))
def test_subsequence_agrees_with_direct_indexing(values, c, r):
    s = make_sequence(values)
    sub = subsequence(s, c, r)
    assert all(sub[n] == s[c * n + r] for n in range(3 * s.ell))


def test_subsequence_rejects_negative():
    with pytest.raises(DomainError):
        subsequence(PeriodicSequence((0, 1)), -1, 0)


def test_shift_and_str():
    s = PeriodicSequence((0, 1, 2))
    assert s.shift(1).period == (1, 2, 0)
    assert s.shift(-1).period == (2, 0, 1)
    assert str(s) == "0,1,2"


@pytest.mark.parametrize("text, expected", [("0,1,2", (0, 1, 2)), ("-1, 0, 1", (-1, 0, 1)),
                                            ("7", (7,))])
def test_parse_period(text, expected):
    assert parse_period(text) == expected


@pytest.mark.parametrize("text", ["", "1,,2", "a,b", "1.5", ","])
def test_parse_period_malformed(text):
    with pytest.raises(DomainError):
        parse_period(text)
