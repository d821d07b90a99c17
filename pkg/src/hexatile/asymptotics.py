"""Large-N behaviour of the intrusion ratios, and the exact Barnes-G identities
behind it.

The scaled ratio M(H_{mN,bN,cN;dN}) / M(H_{mN,bN,cN}) with m = 2a or 2a + 1 is
compared with a closed asymptotic form built from a prefactor, a constant
(K1 or L1), a base raised to N/2 (K2 or L2) and a base raised to N^2/2 (K3).
Every constant is assembled from ``x log x`` style terms in log space with
mpmath, so nothing overflows even when K3^(N^2/2) is astronomically small.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exactnum import DomainError, barnes_g, factorial
from .formulas import Parity, intrusion_ratio
from .oracle import CapacityError

__all__ = [
    "WORKING_DPS",
    "AsymptoticEstimate",
    "Outcome",
    "LimitClass",
    "constants_K",
    "constants_L",
    "asym_ratio",
    "asym_ratio_equal_sides",
    "exact_ratio",
    "convergence_quotient",
    "classify_limit",
    "glaisher",
    "glaisher_sequence",
    "barnes_asymptotic_ratio",
    "BARNES_IDENTITIES",
    "barnes_product_identity_check",
    "factorial_product_check",
]

WORKING_DPS = 40
_MAX_GLAISHER_DIGITS = 50


def _validate(a, b, c, d):
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")
    if b > c:
        b, c = c, b
    if not d < b:
        raise DomainError(f"need d < min(b, c), got d={d}, b={b}, c={c}")
    if (b - c) % 2:
        raise DomainError(f"b and c must have the same parity, got b={b}, c={c}")
    return a, b, c, d


def _xlogx(x) -> mpmath.mpf:
    x = mpmath.mpf(x)
    return mpmath.mpf(0) if x == 0 else x * mpmath.log(x)


def _x2logx(x) -> mpmath.mpf:
    x = mpmath.mpf(x)
    return mpmath.mpf(0) if x == 0 else x * x * mpmath.log(x)


def _log(x) -> mpmath.mpf:
    return mpmath.log(mpmath.mpf(x))


def _log_constants(a, b, c, d):
    """log K1, log K2, log K3, log L1, log L2 (all at working precision)."""
    s = mpmath.mpf(b + c) / 2  # half the sum of the two long sides
    lk1 = (
        (_log(a + d) - _log(a) - _log(d)) / 8
        + (_log(b) + _log(c) + _log(a + b - d) + _log(a + c - d) - _log(a + b) - _log(a + c) - _log(b - d) - _log(c - d)) / 12
        + (_log(a + s) + _log(s - d) - _log(s) - _log(a + s - d)) / 24
    )
    lk2 = (
        _xlogx(a) + _xlogx(d) + _xlogx(s) + _xlogx(a + s - d)
        - _xlogx(a + d) - _xlogx(a + s) - _xlogx(s - d)
    )
    lk3 = (
        2 * _x2logx(s) - _x2logx(b) - _x2logx(c)
        + 2 * _x2logx(a + s - d) - _x2logx(a + b - d) - _x2logx(a + c - d)
        + _x2logx(b - d) + _x2logx(c - d) - 2 * _x2logx(s - d)
        + _x2logx(a + b) + _x2logx(a + c) - 2 * _x2logx(a + s)
    )
    ll1 = (
        (_log(a + s - d) - _log(a + s)) * 11 / 24
        + (_log(a + b) + _log(a + c) - _log(a + b - d) - _log(a + c - d)) * 5 / 12
        + (_log(a + d) - _log(a) - _log(d)) / 8
        + (_log(b) + _log(c) - _log(b - d) - _log(c - d)) / 12
        + (_log(s - d) - _log(s)) / 24
    )
    inner = (
        -d * _log(4)
        + _xlogx(a + b) + _xlogx(a + c) - 2 * _xlogx(a + s)
        + 2 * _xlogx(a + s - d) - _xlogx(a + b - d) - _xlogx(a + c - d)
    )
    ll2 = -lk2 + 2 * inner
    return lk1, lk2, lk3, ll1, ll2


def constants_K(a: int, b: int, c: int, d: int):
    """(K1, K2, K3) as mpmath reals; symmetric in b and c."""
    a, b, c, d = _validate(a, b, c, d)
    with mpmath.workdps(WORKING_DPS):
        lk1, lk2, lk3, _, _ = _log_constants(a, b, c, d)
        return tuple(+mpmath.exp(v) for v in (lk1, lk2, lk3))


def constants_L(a: int, b: int, c: int, d: int):
    """(L1, L2) as mpmath reals."""
    a, b, c, d = _validate(a, b, c, d)
    with mpmath.workdps(WORKING_DPS):
        _, _, _, ll1, ll2 = _log_constants(a, b, c, d)
        return +mpmath.exp(ll1), +mpmath.exp(ll2)


@dataclass(frozen=True)
class AsymptoticEstimate:
    log_value: mpmath.mpf
    value: mpmath.mpf
    terms: dict  # name -> factor; the factors multiply to ``value``

    def __float__(self):
        return float(self.value)


def _log_glaisher():
    return mpmath.mpf(1) / 12 - mpmath.zeta(-1, derivative=1)


def _log_prefactor(parity: Parity, N: int):
    base = mpmath.mpf(1) / 8 - mpmath.mpf(3) / 2 * _log_glaisher() - _log(N) / 8
    if parity is Parity.EVEN:
        return base + mpmath.mpf(7) / 24 * _log(2)
    return base - mpmath.mpf(5) / 24 * _log(2)


def asym_ratio(parity, a: int, b: int, c: int, d: int, N: int) -> AsymptoticEstimate:
    """The large-N estimate of the (a, b, c, d)-ratio at scale N."""
    parity = Parity.parse(parity)
    a, b, c, d = _validate(a, b, c, d)
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    with mpmath.workdps(WORKING_DPS):
        lk1, lk2, lk3, ll1, ll2 = _log_constants(a, b, c, d)
        first, second = (lk1, lk2) if parity is Parity.EVEN else (ll1, ll2)
        names = ("K1", "K2") if parity is Parity.EVEN else ("L1", "L2")
        logs = {
            "prefactor": _log_prefactor(parity, N),
            names[0]: first,
            f"{names[1]}^(N/2)": second * N / 2,
            "K3^(N^2/2)": lk3 * N * N / 2,
        }
        total = mpmath.fsum(logs.values())
        terms = {k: +mpmath.exp(v) for k, v in logs.items()}
        return AsymptoticEstimate(+total, +mpmath.exp(total), terms)


def asym_ratio_equal_sides(parity, a: int, c: int, d: int, N: int) -> AsymptoticEstimate:
    """The b = c specialization, written out independently of K1..L2."""
    parity = Parity.parse(parity)
    _validate(a, c, c, d)
    with mpmath.workdps(WORKING_DPS):
        pre = _log_prefactor(parity, N)
        if parity is Parity.EVEN:
            const = (_log(a + d) + _log(c) + _log(a + c - d) - _log(a) - _log(d) - _log(a + c) - _log(c - d)) / 8
            base = (
                _xlogx(a) + _xlogx(d) + _xlogx(c) + _xlogx(a + c - d)
                - _xlogx(a + d) - _xlogx(a + c) - _xlogx(c - d)
            )
        else:
            const = (_log(a + d) + _log(c) - _log(a) - _log(d) - _log(c - d)) / 8
            const += (_log(a + c) - _log(a + c - d)) * 3 / 8
            base = (
                _xlogx(a + d) + _xlogx(a + c) + _xlogx(c - d)
                - 2 * d * _log(4) - _xlogx(a) - _xlogx(d) - _xlogx(a + c - d) - _xlogx(c)
            )
        logs = {"prefactor": pre, "constant": const, "base^(N/2)": base * N / 2}
        total = mpmath.fsum(logs.values())
        return AsymptoticEstimate(+total, +mpmath.exp(total), {k: +mpmath.exp(v) for k, v in logs.items()})


def exact_ratio(parity, a: int, b: int, c: int, d: int, N: int) -> Fraction:
    """The scaled ratio itself, from the exact product formula."""
    return intrusion_ratio(Parity.parse(parity), a * N, b * N, c * N, d * N)


def convergence_quotient(parity, a: int, b: int, c: int, d: int, N: int) -> mpmath.mpf:
    """exact(N) / asym(N); the exact side is converted only for this division."""
    exact = exact_ratio(parity, a, b, c, d, N)
    est = asym_ratio(parity, a, b, c, d, N)
    with mpmath.workdps(WORKING_DPS):
        log_exact = _log(exact.numerator) - _log(exact.denominator)
        return +mpmath.exp(log_exact - est.log_value)


class Outcome(enum.Enum):
    ZERO = "Zero"
    INFINITY = "Infinity"


@dataclass(frozen=True)
class LimitClass:
    outcome: Outcome
    criterion: Fraction | None = None  # the odd-case base compared with 1
    criterion_parts: tuple[int, int] | None = None  # unreduced (numerator, denominator)


def classify_limit(parity, a: int, b: int, c: int, d: int) -> LimitClass:
    """Limit of the scaled ratio as N grows, decided in integer arithmetic."""
    parity = Parity.parse(parity)
    a, b, c, d = _validate(a, b, c, d)
    if parity is Parity.EVEN or b != c:
        return LimitClass(Outcome.ZERO)
    num = (a + d) ** (a + d) * (a + c) ** (a + c) * (c - d) ** (c - d)
    den = 4 ** (2 * d) * a**a * d**d * (a + c - d) ** (a + c - d) * c**c
    outcome = Outcome.INFINITY if num > den else Outcome.ZERO
    return LimitClass(outcome, Fraction(num, den), (num, den))


# ---------------------------------------------------------------------------
# Glaisher-Kinkelin constant


def glaisher(digits: int = 15) -> mpmath.mpf:
    """A from log A = 1/12 - zeta'(-1), to ``digits`` significant digits."""
    if not isinstance(digits, int) or digits < 1:
        raise DomainError(f"digits must be a positive integer, got {digits!r}")
    if digits > _MAX_GLAISHER_DIGITS:
        raise CapacityError(f"at most {_MAX_GLAISHER_DIGITS} digits are supported, got {digits}")
    with mpmath.workdps(digits + 10):
        value = mpmath.exp(_log_glaisher())
    with mpmath.workdps(digits):
        return +value


def _log_G(n: int) -> mpmath.mpf:
    g = barnes_g(n)
    return _log(g)


def glaisher_sequence(n: int) -> mpmath.mpf:
    """The n-th term of the defining limit of A, with G(n+1) exact."""
    with mpmath.workdps(WORKING_DPS):
        n_ = mpmath.mpf(n)
        log_num = n_ / 2 * _log(2 * mpmath.pi) + (n_**2 / 2 - mpmath.mpf(1) / 12) * _log(n) - 3 * n_**2 / 4 + mpmath.mpf(1) / 12
        return +mpmath.exp(log_num - _log_G(n + 1))


def barnes_asymptotic_ratio(n: int) -> mpmath.mpf:
    """G(n+1) divided by its leading asymptotic form; tends to 1."""
    with mpmath.workdps(WORKING_DPS):
        return +(glaisher(WORKING_DPS - 5) / glaisher_sequence(n))


# ---------------------------------------------------------------------------
# exact product identities in terms of G


def _prod(it):
    out = Fraction(1)
    for v in it:
        out *= v
    return out


def _G(n):
    return barnes_g(n)


def _f(n):
    return factorial(n)


def _shift_low(a, b, c, d, N):
    lhs = _prod(Fraction(_f(k), _f(a * N + k)) for k in range(d * N))
    rhs = Fraction(_G(d * N + 1) * _G(a * N + 1), _G((a + d) * N + 1))
    return lhs, rhs


def _shift_side(side):
    def check(a, b, c, d, N):
        s = b if side == "b" else c
        lhs = _prod(Fraction(_f(a * N + s * N - k - 1), _f(s * N - k - 1)) for k in range(d * N))
        rhs = Fraction(
            _G((a + s) * N + 1) * _G((s - d) * N + 1),
            _G((a + s - d) * N + 1) * _G(s * N + 1),
        )
        return lhs, rhs

    return check


def _doubled(a, b, c, d, N):
    lhs = _prod(Fraction(_f(2 * a * N + 2 * k), _f(2 * k)) for k in range(d * N)) ** 2
    rhs = Fraction(_G((2 * a + 2 * d) * N + 1), _G(2 * a * N + 1) * _G(2 * d * N + 1))
    rhs *= Fraction(
        _f(2 * d * N) * _f((a + d) * N) * _f(2 * a * N),
        _f(d * N) * _f(a * N) * _f((2 * a + 2 * d) * N),
    )
    return lhs, rhs


def _gap(a, b, c, d, N):
    h = (b + c) // 2
    lhs = _prod(Fraction(_f(b * N + c * N - 2 * k - 1), _f(2 * a * N + b * N + c * N - 2 * k - 1)) for k in range(d * N)) ** 2
    rhs = Fraction(
        _G((b + c) * N + 1) * _G((2 * a + b + c - 2 * d) * N + 1),
        _G((2 * a + b + c) * N + 1) * _G((b + c - 2 * d) * N + 1),
    )
    rhs *= Fraction(
        _f((b + c) * N) * _f((2 * a + b + c - 2 * d) * N) * _f((a + h) * N) * _f((h - d) * N),
        _f((b + c - 2 * d) * N) * _f((2 * a + b + c) * N) * _f((a + h - d) * N) * _f(h * N),
    )
    return lhs, rhs


# name -> checker returning (lhs, rhs); "doubled" and "gap" compare squares
BARNES_IDENTITIES = {
    "shift-low": _shift_low,
    "shift-b": _shift_side("b"),
    "shift-c": _shift_side("c"),
    "doubled": _doubled,
    "gap": _gap,
}


def barnes_product_identity_check(which: str, a: int, b: int, c: int, d: int, N: int) -> bool:
    """Exact check of one factorial-product identity in terms of Barnes G.

    ``doubled`` and ``gap`` are stated with a square root; both sides are
    squared before comparing.
    """
    if which not in BARNES_IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; expected one of {sorted(BARNES_IDENTITIES)}")
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d), ("N", N)):
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")
    if which == "shift-b" and d > b or which == "shift-c" and d > c:
        raise DomainError("the shifted side must be at least d")
    if which == "gap" and ((b + c) % 2 or b + c < 2 * d):
        raise DomainError("the gap identity needs b + c even and at least 2d")
    lhs, rhs = BARNES_IDENTITIES[which](a, b, c, d, N)
    return lhs == rhs


def factorial_product_check(a: int, b: int, c: int, d: int, N: int) -> bool:
    """The even-parity scaled ratio equals the factorial product obtained from
    it by rewriting each shifted factorial, and equals the square root of the
    product of the five G-identities' right-hand sides (checked squared)."""
    if (c - b) % 2 or d > min(b, c):
        raise DomainError("need b, c of equal parity and d <= min(b, c)")
    aN, bN, cN, dN = a * N, b * N, c * N, d * N
    prod = _prod(
        Fraction(_f(k) ** 2 * _f(2 * aN + 2 * k), _f(aN + k) ** 2 * _f(2 * k))
        * Fraction(_f(aN + bN - k - 1) * _f(aN + cN - k - 1), _f(bN - k - 1) * _f(cN - k - 1))
        * Fraction(_f(bN + cN - 2 * k - 1), _f(2 * aN + bN + cN - 2 * k - 1))
        for k in range(dN)
    )
    ratio = intrusion_ratio(Parity.EVEN, aN, bN, cN, dN)
    if prod != ratio:
        return False
    squared = Fraction(1)
    for name, check in BARNES_IDENTITIES.items():
        _, rhs = check(a, b, c, d, N)
        squared *= rhs if name in ("doubled", "gap") else rhs**2
    # shift-low appears twice in the product
    squared *= BARNES_IDENTITIES["shift-low"](a, b, c, d, N)[1] ** 2
    return squared == ratio**2
