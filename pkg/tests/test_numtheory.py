import itertools
import math

import pytest
from hypothesis import given, strategies as st
from sympy import Poly, cyclotomic_poly, symbols
from sympy.ntheory import n_order

from periodic_ranks.errors import DomainError, UnsupportedError
from periodic_ranks.numtheory import (IntPolynomial, additive_psi, cyclotomic, cyclotomic_product,
                                      divisors, euler_phi, factorize, lcm, ord_pre, poly_divmod,
                                      poly_eq, poly_mul, poly_product)

X = symbols("x")


def P(*coeffs):
    return IntPolynomial(coeffs)


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def gcd_count(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def psi_by_subsets(n):
    # least sum of phi over divisor sets whose lcm is n
    divs = trial_divisors(n)
    best = None
    for size in range(1, len(divs) + 1):
        for combo in itertools.combinations(divs, size):
            if math.lcm(*combo) == n:
                total = sum(gcd_count(d) for d in combo)
                best = total if best is None else min(best, total)
    return best


@pytest.mark.parametrize("n, expected", [(1, [1]), (10, [1, 2, 5, 10]),
                                         (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_match_trial_division():
    for n in range(1, 400):
        assert divisors(n) == trial_divisors(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (7, 6), (10, 4)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_gcd_count():
    for n in range(1, 300):
        assert euler_phi(n) == gcd_count(n)


@pytest.mark.parametrize("fn", [divisors, euler_phi, factorize, cyclotomic])
@pytest.mark.parametrize("bad", [0, -3])
def test_nonpositive_inputs_rejected(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


def test_factorize_roundtrip():
    for n in range(1, 500):
        assert math.prod(p**a for p, a in factorize(n).items()) == n


@pytest.mark.parametrize("n, expected", [(2, 1), (15, 6), (10, 4)])
def test_additive_psi_examples(n, expected):
    assert additive_psi(n) == expected


def test_additive_psi_known_values():
    # OEIS A080737, n = 2..20
    known = [1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 6, 8, 16, 6, 18, 6]
    assert [additive_psi(n) for n in range(2, 21)] == known
    assert additive_psi(30) == 6


def test_additive_psi_is_least_divisor_set_sum():
    for n in range(2, 61):
        assert additive_psi(n) == psi_by_subsets(n), n


@pytest.mark.parametrize("bad", [1, 0, -5])
def test_additive_psi_domain(bad):
    with pytest.raises(DomainError):
        additive_psi(bad)


def test_lcm():
    assert lcm([4, 6]) == 12
    assert lcm([3, 5]) == 15
    assert lcm([]) == 1


@pytest.mark.parametrize("k, ell, pre, order", [(2, 6, 1, 2), (3, 7, 0, 6), (2, 3, 0, 2),
                                                (4, 3, 0, 1), (2, 8, 3, 1), (6, 12, 2, 1)])
def test_ord_pre_examples(k, ell, pre, order):
    op = ord_pre(k, ell)
    assert (op.pre, op.ord) == (pre, order)


def brute_ord_pre(k, ell):
    # least pre, then least ord, with k^(e+ord) = k^e mod ell for every e >= pre
    horizon = 3 * ell
    for pre in range(ell + 1):
        for order in range(1, ell + 1):
            if all(pow(k, e + order, ell) == pow(k, e, ell) for e in range(pre, horizon)):
                return pre, order


def test_ord_pre_matches_brute_force():
    for k in range(2, 12):
        for ell in range(2, 40):
            op = ord_pre(k, ell)
            assert (op.pre, op.ord) == brute_ord_pre(k, ell), (k, ell)
            if math.gcd(k, ell) == 1:
                assert op.pre == 0 and op.ord == n_order(k, ell)


def test_ord_pre_domain():
    with pytest.raises(DomainError):
        ord_pre(1, 5)
    with pytest.raises(DomainError):
        ord_pre(3, 1)


def test_polynomial_normalization():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).degree == -1
    assert P(0, 0).is_zero()
    assert P(3).degree == 0
    assert P(-1, 0, 1).leading == 1
    assert str(P(1, 2, 3, 3, 3, 2, 1)) == "x^6 + 2*x^5 + 3*x^4 + 3*x^3 + 3*x^2 + 2*x + 1"
    assert str(P(-1, 1)) == "x - 1"
    assert P(1, 0, 1)(2) == 5


def test_poly_examples():
    assert poly_mul(P(-1, 1), P(1, 1)) == P(-1, 0, 1)
    q, r = poly_divmod(IntPolynomial.x_pow_minus_one(3), P(-1, 1))
    assert (q, r) == (P(1, 1, 1), P())
    q, r = poly_divmod(IntPolynomial.x_pow_minus_one(6), cyclotomic(6))
    assert q == P(-1, -1, 0, 1, 1) and r.is_zero()
    assert poly_eq(P(1, 2), P(1, 2, 0))


def test_poly_division_errors():
    with pytest.raises(DomainError):
        poly_divmod(P(1, 1), P())
    with pytest.raises(UnsupportedError):
        poly_divmod(P(1, 1), P(1, 2))


small_polys = st.lists(st.integers(-5, 5), min_size=0, max_size=6).map(tuple).map(IntPolynomial)
monic_polys = st.lists(st.integers(-5, 5), min_size=0, max_size=4).map(
    lambda c: IntPolynomial(tuple(c) + (1,)))


@given(small_polys, monic_polys)
def test_divmod_reconstructs(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(small_polys, small_polys, st.integers(-4, 4))
def test_multiplication_is_evaluation_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)


@pytest.mark.parametrize("m, expected", [(1, P(-1, 1)), (6, P(1, -1, 1)), (4, P(1, 0, 1))])
def test_cyclotomic_examples(m, expected):
    assert cyclotomic(m) == expected


def test_cyclotomic_matches_sympy():
    for m in range(1, 121):
        want = tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, X), X).all_coeffs()))
        assert cyclotomic(m).coeffs == want, m


def test_cyclotomic_product_of_divisors_is_x_pow_minus_one():
    for n in range(1, 121):
        assert cyclotomic_product(divisors(n)) == IntPolynomial.x_pow_minus_one(n)


def test_cyclotomic_degree_and_palindromic():
    for m in range(1, 121):
        phi_m = cyclotomic(m)
        assert phi_m.degree == euler_phi(m)
        assert phi_m.is_monic()
        if m >= 2:
            assert phi_m.is_palindromic()


def test_poly_product_empty_is_one():
    assert poly_product([]) == P(1)
