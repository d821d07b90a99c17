"""Exact arithmetic kernels.

Everything here works on Python ints and :class:`fractions.Fraction`; nothing
ever rounds.  Half-integer bases (``3/2``, ``k + 1/2``...) are carried by
:class:`HalfInteger`, which stores twice its value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "DomainError",
    "HalfInteger",
    "half",
    "as_fraction",
    "shifted_factorial",
    "factorial",
    "double_factorial",
    "binomial",
    "hyperfactorial",
    "barnes_g",
    "bracket_product",
    "shifted_to_factorial_identity_check",
]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an exact function."""


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An element of Z ∪ (Z + 1/2), stored as ``twice`` its value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be an int, got {type(self.twice).__name__}")

    @classmethod
    def of(cls, value: "Number") -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        v = Fraction(value)
        if (2 * v).denominator != 1:
            raise DomainError(f"{value} is not an integer or half-integer")
        return cls(int(2 * v))

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInteger(self.twice + HalfInteger.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInteger(self.twice - HalfInteger.of(other).twice)

    def __repr__(self):
        if self.is_integer:
            return f"HalfInteger({self.twice // 2})"
        return f"HalfInteger({self.twice}/2)"


Number = Union[int, Fraction, HalfInteger]


def half(twice: int) -> HalfInteger:
    """``half(3)`` is 3/2."""
    return HalfInteger(twice)


def as_fraction(value: Number) -> Fraction:
    if isinstance(value, HalfInteger):
        return value.to_fraction()
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot treat {value!r} as an exact rational")


def shifted_factorial(a: Number, n: int) -> Fraction:
    """Rising factorial ``(a)_n`` for half-integer ``a``, extended to ``n < 0``.

    For ``n < 0`` the value is ``1/((a-1)(a-2)...(a+n))``, which agrees with
    ``Gamma(a+n)/Gamma(a)``.  Requires ``a > 0`` and ``a + n > 0``.
    """
    base = HalfInteger.of(a)
    av = base.to_fraction()
    if av <= 0 or av + n <= 0:
        raise DomainError(f"shifted factorial ({av})_{n} needs a > 0 and a + n > 0")
    # work with doubled integers so half-integer bases stay in Z
    t = base.twice
    if n >= 0:
        num = math.prod(t + 2 * i for i in range(n))
        return Fraction(num, 2**n)
    den = math.prod(t - 2 * i for i in range(1, -n + 1))
    return Fraction(2 ** (-n), den)


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)...; 0!! is the empty product."""
    if n < 0:
        raise DomainError(f"double factorial of {n}")
    return math.prod(range(n, 0, -2))


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise DomainError(f"binomial with negative top {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def hyperfactorial(n: int) -> int:
    """H(n) = 0! 1! ... (n-1)!  (the MacMahon building block, not K(n))."""
    if n < 0:
        raise DomainError(f"hyperfactorial of negative integer {n}")
    out, f = 1, 1
    for i in range(1, n):
        f *= i
        out *= f
    return out


def barnes_g(n: int) -> int:
    """Barnes G at an integer: 0 for n <= 0, else 0! 1! ... (n-2)!."""
    if n <= 0:
        return 0
    return hyperfactorial(n - 1)


def bracket_product(a: Number, n: int) -> Fraction:
    """``<a, a+n> = a (a+1)^2 (a+2)^3 ... (a+n-1)^2 (a+n)``; 1 when n < 0."""
    base = HalfInteger.of(a)
    if base.twice <= 0:
        raise DomainError(f"bracket product needs a > 0, got {base.to_fraction()}")
    if n < 0:
        return Fraction(1)
    num = 1
    power_of_two = 0
    for i in range(n + 1):
        e = min(i + 1, n + 1 - i)
        num *= (base.twice + 2 * i) ** e
        power_of_two += e
    return Fraction(num, 2**power_of_two)


def shifted_to_factorial_identity_check(i: int, j: int) -> bool:
    """Check both factorial forms of ``(i)_j`` and ``(i+1/2)_j`` exactly."""
    if i < 1 or i + j <= 0:
        raise DomainError(f"identity needs i >= 1 and i + j > 0, got ({i}, {j})")
    f = math.factorial
    lhs_int = shifted_factorial(i, j)
    rhs_int = Fraction(f(i + j - 1), f(i - 1))
    lhs_half = shifted_factorial(HalfInteger(2 * i + 1), j)
    rhs_half = Fraction(1, 1)
    rhs_half *= Fraction(f(i) * f(2 * i + 2 * j), f(i + j) * f(2 * i))
    rhs_half /= Fraction(2) ** (2 * j)
    rhs_half_alt = Fraction(f(i - 1) * f(2 * i + 2 * j - 1), f(i + j - 1) * f(2 * i - 1)) / Fraction(2) ** (2 * j)
    return lhs_int == rhs_int and lhs_half == rhs_half == rhs_half_alt
