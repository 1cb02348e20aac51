"""Divisors, totients, multiplicative order and cyclotomic polynomials.

Polynomials are dense integer coefficient tuples, lowest degree first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .errors import DomainError, UnsupportedError


def _require_positive(n: int, name: str = "n") -> None:
    if n <= 0:
        raise DomainError(f"{name} must be a positive integer, got {n}")


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``."""
    _require_positive(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def additive_psi(n: int) -> int:
    """Additive totient: the sum of phi over the prime-power parts of ``n``.

    A lone factor 2 (``n = 2 * odd`` with ``odd > 1``) contributes nothing,
    since a matrix of odd order ``m`` times ``-1`` already has order ``2m``.
    """
    if n <= 1:
        raise DomainError(f"additive_psi is defined for n >= 2, got {n}")
    factors = factorize(n)
    if n != 2 and factors.get(2) == 1:
        del factors[2]
    return sum(p ** (a - 1) * (p - 1) for p, a in factors.items())


def lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@dataclass(frozen=True)
class OrdPre:
    """Preperiod and eventual period of ``(k**e mod ell)`` for ``e >= 0``."""

    ell: int
    k: int
    pre: int
    ord: int


def ord_pre(k: int, ell: int) -> OrdPre:
    if k < 2 or ell < 2:
        raise DomainError(f"ord_pre needs k, ell >= 2, got k={k}, ell={ell}")
    first_seen: dict[int, int] = {}
    value, e = 1 % ell, 0
    while value not in first_seen:
        first_seen[value] = e
        value = value * k % ell
        e += 1
    pre = first_seen[value]
    return OrdPre(ell=ell, k=k, pre=pre, ord=e - pre)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPolynomial:
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        if not other.is_monic():
            raise UnsupportedError("only division by monic polynomials is supported")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            q = rem[i + db]
            quot[i] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:db]))

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[1]

    def divides(self, other: IntPolynomial) -> bool:
        return (other % self).is_zero()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    return divmod(a, b)


def poly_eq(a: IntPolynomial, b: IntPolynomial) -> bool:
    return a.coeffs == b.coeffs


def poly_product(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    return reduce(lambda a, b: a * b, polys, IntPolynomial((1,)))


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPolynomial:
    """The ``m``-th cyclotomic polynomial.

    Obtained by dividing ``x**m - 1`` by every ``Phi_d`` with ``d`` a proper
    divisor of ``m``; each division is exact and by a monic polynomial.
    """
    _require_positive(m, "m")
    poly = IntPolynomial.x_pow_minus_one(m)
    for d in divisors(m)[:-1]:
        poly, rem = divmod(poly, cyclotomic(d))
        assert rem.is_zero()
    return poly


def cyclotomic_product(indices: Sequence[int]) -> IntPolynomial:
    return poly_product(cyclotomic(m) for m in sorted(indices))
