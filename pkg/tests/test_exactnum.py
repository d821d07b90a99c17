import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hexatile.exactnum import (
    DomainError,
    HalfInteger,
    barnes_g,
    binomial,
    bracket_product,
    double_factorial,
    factorial,
    half,
    hyperfactorial,
    shifted_factorial,
    shifted_to_factorial_identity_check,
)

halves = st.integers(min_value=1, max_value=20).map(HalfInteger)  # 1/2 .. 10


def gamma_ratio(a: Fraction, n: int) -> Fraction:
    # independent route via the Gamma recurrence, only for integer or half-integer a
    out = Fraction(1)
    if n >= 0:
        for i in range(n):
            out *= a + i
    else:
        for i in range(1, -n + 1):
            out /= a - i
    return out


class TestShiftedFactorial:
    def test_examples(self):
        assert shifted_factorial(2, 0) == 1
        assert shifted_factorial(2, 3) == 24
        assert shifted_factorial(half(3), -1) == 2

    @pytest.mark.parametrize("a, n", [(0, 1), (1, -1), (half(1), -1), (half(-1), 3), (2, -2)])
    def test_rejects_outside_domain(self, a, n):
        with pytest.raises(DomainError):
            shifted_factorial(a, n)

    def test_rejects_non_half_integer(self):
        with pytest.raises(DomainError):
            shifted_factorial(Fraction(1, 3), 2)

    @given(halves, st.integers(min_value=-20, max_value=20))
    def test_step(self, a, n):
        av = a.to_fraction()
        assume(av + n > 0)
        assert shifted_factorial(a, n + 1) == shifted_factorial(a, n) * (av + n)

    @given(halves, st.integers(-20, 20), st.integers(-20, 20))
    def test_composition(self, a, n, m):
        av = a.to_fraction()
        assume(av + n > 0 and av + n + m > 0)
        lhs = shifted_factorial(a, n) * shifted_factorial(a + n, m)
        assert lhs == shifted_factorial(a, n + m)

    @given(halves, st.integers(-20, 20))
    def test_matches_gamma_ratio(self, a, n):
        av = a.to_fraction()
        assume(av + n > 0)
        assert shifted_factorial(a, n) == gamma_ratio(av, n)

    def test_results_are_canonical(self):
        v = shifted_factorial(half(3), 4)
        assert isinstance(v, Fraction)
        assert math.gcd(v.numerator, v.denominator) == 1
        assert shifted_factorial(half(3), 4) == v


class TestFactorialFamily:
    def test_examples(self):
        assert factorial(0) == 1
        assert double_factorial(6) == 48 and double_factorial(5) == 15
        assert binomial(5, 2) == 10
        assert binomial(5, -1) == 0 and binomial(5, 6) == 0

    @pytest.mark.parametrize("fn", [factorial, double_factorial, hyperfactorial])
    def test_negative(self, fn):
        with pytest.raises(DomainError):
            fn(-1)

    def test_hyperfactorial(self):
        assert hyperfactorial(0) == 1
        assert hyperfactorial(4) == 12
        assert hyperfactorial(6) == 34560

    def test_barnes_g(self):
        assert barnes_g(0) == 0 and barnes_g(-3) == 0
        assert barnes_g(2) == 1 and barnes_g(4) == 2

    @given(st.integers(1, 40))
    def test_barnes_recurrence(self, n):
        assert barnes_g(n + 1) == barnes_g(n) * factorial(n - 1)

    @given(st.integers(0, 30))
    def test_double_factorial_split(self, n):
        assert double_factorial(2 * n) * double_factorial(2 * n - 1 if n else 0) == factorial(2 * n)


class TestBracketProduct:
    def test_examples(self):
        assert bracket_product(half(5), -3) == 1
        assert bracket_product(1, 2) == 12
        assert bracket_product(half(3), 1) == Fraction(15, 4)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            bracket_product(0, 2)

    @given(halves, st.integers(0, 12))
    def test_tent_exponents(self, a, n):
        av = a.to_fraction()
        expected = Fraction(1)
        for i in range(n + 1):
            expected *= (av + i) ** min(i + 1, n + 1 - i)
        assert bracket_product(a, n) == expected


class TestFactorialForms:
    @pytest.mark.parametrize("i, j", [(3, 2), (2, -1), (1, 3)])
    def test_examples(self, i, j):
        assert shifted_to_factorial_identity_check(i, j)

    def test_sweep(self):
        for i in range(1, 13):
            for j in range(-i + 1, 13):
                assert shifted_to_factorial_identity_check(i, j)

    def test_half_integer_example(self):
        assert shifted_factorial(half(3), 3) == Fraction(105, 8)


def test_half_integer_roundtrip():
    assert HalfInteger.of(Fraction(5, 2)) == half(5)
    assert HalfInteger.of(3).is_integer
    assert half(3) + 1 == half(5)
    with pytest.raises(DomainError):
        HalfInteger.of(Fraction(1, 3))
