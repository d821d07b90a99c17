"""Closed-form tiling counts, all evaluated in exact rational arithmetic."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import (
    DomainError,
    HalfInteger,
    binomial,
    bracket_product,
    double_factorial,
    factorial,
    hyperfactorial,
    shifted_factorial,
)
from .region import RegionSpec

__all__ = [
    "Parity",
    "TilingCount",
    "macmahon",
    "macmahon_product",
    "intrusion_ratio",
    "intrusion_count",
    "step_ratio",
    "pp_restricted_ratio",
    "fk_count",
    "ciucu_R",
    "ciucu_Rbar",
    "IdentityReport",
    "induction_identity_checks",
    "factorization_identity_check",
]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, m: int) -> "Parity":
        return cls.EVEN if m % 2 == 0 else cls.ODD

    @classmethod
    def parse(cls, value) -> "Parity":
        if isinstance(value, Parity):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class TilingCount:
    """A (weighted) tiling count together with where it came from."""

    value: Fraction
    source: str  # "formula:<name>" or "oracle:<method>"
    region: RegionSpec | None = None

    def __post_init__(self):
        v = Fraction(self.value)
        if v < 0:
            raise ValueError(f"tiling counts are nonnegative, got {v}")
        object.__setattr__(self, "value", v)

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    def __int__(self):
        if not self.is_integer:
            raise ValueError(f"{self.value} is not an integer count")
        return self.value.numerator


H = hyperfactorial
sf = shifted_factorial


def _half(twice: int) -> HalfInteger:
    return HalfInteger(twice)


def macmahon_product(a: int, b: int, c: int) -> Fraction:
    """The triple product over (i, j, k) of (i+j+k-1)/(i+j+k-2)."""
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return out


def macmahon(a: int, b: int, c: int) -> TilingCount:
    """Tilings of the hexagon a, b, c, a, b, c (boxed plane partitions)."""
    if min(a, b, c) < 0:
        raise DomainError(f"hexagon sides must be nonnegative, got {(a, b, c)}")
    num = H(a) * H(b) * H(c) * H(a + b + c)
    den = H(a + b) * H(b + c) * H(c + a)
    q, r = divmod(num, den)
    assert r == 0
    return TilingCount(Fraction(q), "formula:macmahon", RegionSpec.make("Hexagon", a=a, b=b, c=c))


def _check_ratio_args(a, b, c, d):
    for name, v in (("a", a), ("b", b), ("c", c), ("d", d)):
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{name} must be a nonnegative integer, got {v!r}")
    if d > min(b, c):
        raise DomainError(f"need d <= min(b, c), got d={d}, b={b}, c={c}")


def step_ratio(parity, a: int, b: int, c: int, k: int) -> Fraction:
    """M(H_{m,b,c;k+1}) / M(H_{m,b,c;k}) with m = 2a (even) or 2a+1 (odd).

    Requires b <= c after the caller's normalization; 0 <= k < b.
    """
    parity = Parity.parse(parity)
    if b > c:
        b, c = c, b
    if not 0 <= k < b:
        raise DomainError(f"step ratio needs 0 <= k < min(b, c), got k={k}")
    f = (c - b) // 2
    if parity is Parity.EVEN:
        num = (
            sf(_half(2 * k + 1), b - 2 * k)
            * sf(a + k + 1, b - 2 * k - 1)
            * sf(_half(2 * (b - k) + 1), f)
            * sf(c - k, -f)
        )
        den = (
            sf(_half(2 * (a + k) + 1), b - 2 * k)
            * sf(k + 1, b - 2 * k - 1)
            * sf(_half(2 * (a + b - k) + 1), f)
            * sf(a + c - k, -f)
        )
        return num / den
    num = (
        sf(a + k + 1, c - 2 * k)
        * sf(_half(2 * k + 3), c - 2 * k - 2)
        * sf(b - k, f)
        * sf(_half(2 * (c - k) - 1), -f)
    )
    den = (
        sf(k + 1, c - 2 * k - 1)
        * sf(_half(2 * (a + k) + 3), c - 2 * k - 1)
        * sf(a + b - k + 1, f)
        * sf(_half(2 * (a + c - k) + 1), -f)
    )
    return num / den / 4


def intrusion_ratio(parity, a: int, b: int, c: int, d: int) -> Fraction:
    """M(H_{m,b,c;d}) / M(H_{m,b,c}) for m = 2a or 2a + 1.

    The two sides b and c may be given in either order; the region with them
    swapped is a mirror image.
    """
    _check_ratio_args(a, b, c, d)
    if b > c:
        b, c = c, b
    out = Fraction(1)
    for k in range(d):
        out *= step_ratio(parity, a, b, c, k)
    return out


def intrusion_count(m: int, b: int, c: int, d: int) -> TilingCount:
    """Number of tilings of the hexagon m, b, c with d holes on the bisector."""
    _check_ratio_args(m, b, c, d)
    ratio = intrusion_ratio(Parity.of(m), m // 2, b, c, d)
    value = ratio * macmahon(m, b, c).value
    assert value.denominator == 1, (m, b, c, d, value)
    return TilingCount(value, "formula:intrusion", RegionSpec.make("Intruded", m=m, b=b, c=c, d=d))


def pp_restricted_ratio(b: int, c: int, a: int, d: int) -> Fraction:
    """|P(b, c, 2a; d)| / |P(b, c, 2a)|: d anti-diagonal entries pinned to a."""
    if b > c:
        raise DomainError(f"need b <= c, got b={b}, c={c}")
    if d > b:
        raise DomainError(f"need d <= b, got d={d}, b={b}")
    return intrusion_ratio(Parity.EVEN, a, b, c, d)


def fk_count(m: int, N: int, r: int) -> TilingCount:
    """The left-aligned fixed-lozenge count on the 2m, N, N hexagon.

    The product over 1/i! runs from i = N - r to N - 2 and is empty (equal to
    1) when that range is empty.
    """
    if m < 0 or not 1 <= r <= N:
        raise DomainError(f"need m >= 0 and 1 <= r <= N, got m={m}, N={N}, r={r}")
    e2 = (r - 1) * (r - 2 * N)
    assert e2 % 2 == 0
    value = Fraction(2) ** (e2 // 2)
    value *= Fraction(binomial(m + N - 1, m) ** 2, binomial(2 * m + 2 * N - 1, 2 * m))
    for i in range(N - r, N - 1):
        value /= factorial(i)
    for i in range(1, r):
        value *= Fraction(double_factorial(2 * i) * double_factorial(2 * N - 2 * i - 1), double_factorial(2 * i - 1))
        value *= sf(m + i + 1, N - 2 * i - 1) / sf(_half(2 * (m + i) + 1), N - 2 * i)
    value *= macmahon(N, N, 2 * m).value
    return TilingCount(value, "formula:fk", RegionSpec.make("Intruded", m=2 * m, b=N, c=N, d=r))


def _pairwise_gaps(n: int) -> int:
    return math.prod(j - i for i in range(1, n + 1) for j in range(i + 1, n + 1))


def _cross(m: int, n: int) -> int:
    return math.prod(i + j for i in range(1, m + 1) for j in range(1, n + 1))


def _sf0(a, n: int) -> Fraction:
    # (a)_0 = 1 even at a = 0, where the extended definition does not apply
    return Fraction(1) if n == 0 else sf(a, n)


def ciucu_R(m: int, n: int, x: int) -> TilingCount:
    """Weighted count of R_{m,n,x}; also valid at m = 0, x = -1."""
    if m < 0 or n < 0 or (x < 0 and not (m == 0 and x == -1)):
        raise DomainError(f"R_{{{m},{n},{x}}} is outside the formula's domain")
    v = Fraction(2) ** (n * (n - 1) // 2 - 2 * m * n)
    for i in range(1, m + 1):
        v /= factorial(2 * i)
    for i in range(1, n + 1):
        v /= factorial(2 * i - 1)
    v *= Fraction(_pairwise_gaps(m) * _pairwise_gaps(n), _cross(m, n))
    v *= _sf0(x + n + 1, m) * _sf0(x + n + 2, m)
    v *= bracket_product(x + 2, n - 2) * bracket_product(_half(2 * x + 3), n - 1)
    for i in range(1, n + 1):
        v *= _sf0(x + i, m) / _sf0(_half(2 * (x + i) + 1), m)
    for i in range(1, m + 1):
        v *= _sf0(2 * x + n + i + 2, n + i - 1)
    return TilingCount(v, "formula:ciucu_R", RegionSpec.make("R", m=m, n=n, x=x))


def ciucu_Rbar(m: int, n: int, x: int) -> TilingCount:
    """Weighted count of Rbar_{m,n,x}."""
    if min(m, n, x) < 0:
        raise DomainError(f"Rbar_{{{m},{n},{x}}} is outside the formula's domain")
    v = Fraction(2) ** (m * (m - 1) // 2 - 2 * m * n - n)
    for i in range(1, m + 1):
        v /= factorial(2 * i - 1)
    for i in range(1, n + 1):
        v /= factorial(2 * i)
    v *= Fraction(_pairwise_gaps(m) * _pairwise_gaps(n), _cross(m, n))
    v *= _sf0(x + m + 1, n)
    v *= bracket_product(x + 1, m - 1) * bracket_product(_half(2 * x + 3), m - 2)
    for i in range(1, m + 1):
        v *= _sf0(x + i, n) / _sf0(_half(2 * (x + i) + 1), n)
    for i in range(1, n + 1):
        v *= _sf0(2 * x + m + i + 1, m + i)
    return TilingCount(v, "formula:ciucu_Rbar", RegionSpec.make("Rbar", m=m, n=n, x=x))


# ---------------------------------------------------------------------------
# identity checks used by the inductive proof of the intrusion formula


def _M(m: int, b: int, c: int, d: int) -> Fraction:
    return intrusion_count(m, b, c, d).value


def _fact_ratio(num: tuple[int, ...], den: tuple[int, ...]) -> Fraction:
    return Fraction(math.prod(factorial(n) for n in num), math.prod(factorial(n) for n in den))


def _prod_range(lo: int, hi: int, term) -> Fraction:
    out = Fraction(1)
    for k in range(lo, hi):
        out *= term(k)
    return out


@dataclass(frozen=True)
class IdentityReport:
    """Name -> exact (lhs, rhs) pairs for a batch of identities."""

    params: tuple
    values: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [k for k, (lhs, rhs) in self.values.items() if lhs != rhs]

    @property
    def ok(self) -> bool:
        return not self.failures


def induction_identity_checks(a: int, b: int, c: int, t: int) -> IdentityReport:
    """Ratio identities that close the induction on c - b and on d.

    Each ratio of two hexagon counts (from the product formula and MacMahon)
    is compared with its simplified product, and the two three-term
    condensation relations, divided through by their left side, are checked
    to sum to exactly 1.  Needs a >= 0 and 1 <= t <= b < c.
    """
    if a < 0 or not 1 <= t <= b < c:
        raise DomainError(f"need a >= 0 and 1 <= t <= b < c, got a={a}, b={b}, c={c}, t={t}")
    A2, A1 = 2 * a, 2 * a + 1
    s = 2 * a + b + c
    v: dict[str, tuple[Fraction, Fraction]] = {}

    # even count at distance t, built from the hexagons one step narrower in c
    v["even: b up, c down"] = (
        _M(A2, b + 1, c - 1, t) / _M(A2, b, c - 1, t),
        _fact_ratio((b, s - 1), (A2 + b, b + c - 1))
        * _prod_range(0, t, lambda k: Fraction((a + b - k) * (b + c - 2 * k - 1), (b - k) * (s - 2 * k - 1))),
    )
    v["odd: b down, c down"] = (
        _M(A1, b - 1, c - 1, t - 1) / _M(A1, b, c - 1, t - 1),
        _fact_ratio((A2 + b, b + c - 2), (s - 1, b - 1))
        * _prod_range(0, t - 1, lambda k: Fraction((b - k - 1) * (s - 2 * k - 1), (a + b - k) * (b + c - 2 * k - 3))),
    )
    v["even: c up"] = (
        _M(A2, b, c, t) / _M(A2, b, c - 1, t),
        _fact_ratio((c - 1, s - 1), (A2 + c - 1, b + c - 1))
        * _prod_range(0, t, lambda k: Fraction((a + c - k - 1) * (b + c - 2 * k - 1), (c - k - 1) * (s - 2 * k - 1))),
    )
    v["odd: c down"] = (
        _M(A1, b, c - 2, t - 1) / _M(A1, b, c - 1, t - 1),
        _fact_ratio((A2 + c - 1, b + c - 2), (s - 1, c - 2))
        * _prod_range(0, t - 1, lambda k: Fraction((c - k - 2) * (s - 2 * k - 1), (a + c - k - 1) * (b + c - 2 * k - 3))),
    )
    lhs = _M(A1, b, c - 1, t - 1) * _M(A2, b, c - 1, t)
    v["even step sums to one"] = (
        (_M(A2, b + 1, c - 1, t) * _M(A1, b - 1, c - 1, t - 1) + _M(A2, b, c, t) * _M(A1, b, c - 2, t - 1)) / lhs,
        Fraction(1),
    )
    v["even step, simplified terms"] = (
        Fraction(a + b - t + 1, s - 2 * t + 1) + Fraction(a + c - t, s - 2 * t + 1),
        Fraction(1),
    )

    # odd count at distance t, from the hexagons with b one larger
    v["even: b up twice"] = (
        _M(A2, b + 2, c, t) / _M(A2, b + 1, c, t),
        _fact_ratio((b + 1, s + 1), (b + c + 1, A2 + b + 1))
        * _prod_range(0, t, lambda k: Fraction((a + b - k + 1) * (b + c - 2 * k + 1), (b - k + 1) * (s - 2 * k + 1))),
    )
    v["odd: b down"] = (
        _M(A1, b, c, t) / _M(A1, b + 1, c, t),
        _fact_ratio((b + c, A2 + b + 1), (b, s + 1))
        * _prod_range(0, t, lambda k: Fraction((b - k) * (s - 2 * k + 1), (a + b - k + 1) * (b + c - 2 * k - 1))),
    )
    v["even: b up, c up"] = (
        _M(A2, b + 1, c + 1, t) / _M(A2, b + 1, c, t),
        _fact_ratio((c, s + 1), (b + c + 1, A2 + c))
        * _prod_range(0, t, lambda k: Fraction((a + c - k) * (b + c - 2 * k + 1), (c - k) * (s - 2 * k + 1))),
    )
    v["odd: b up, c down"] = (
        _M(A1, b + 1, c - 1, t) / _M(A1, b + 1, c, t),
        _fact_ratio((b + c, A2 + c), (c - 1, s + 1))
        * _prod_range(0, t, lambda k: Fraction((c - k - 1) * (s - 2 * k + 1), (a + c - k) * (b + c - 2 * k - 1))),
    )
    lhs = _M(A1, b + 1, c, t) * _M(A2, b + 1, c, t)
    v["odd step sums to one"] = (
        (_M(A2, b + 2, c, t) * _M(A1, b, c, t) + _M(A2, b + 1, c + 1, t) * _M(A1, b + 1, c - 1, t)) / lhs,
        Fraction(1),
    )
    v["odd step, simplified terms"] = (
        Fraction(b - t + 1, b + c - 2 * t + 1) + Fraction(c - t, b + c - 2 * t + 1),
        Fraction(1),
    )
    return IdentityReport((a, b, c, t), v)


def factorization_identity_check(m: int, c: int, d: int, config=None) -> bool:
    """Oracle check of M(H_{m,c,c;d}) = 2^(c-d) M(plus) M(minus)."""
    from .oracle import count_tilings
    from .region import build_intruded, split_factorization

    plus, minus = split_factorization(m, c, d)
    whole = count_tilings(build_intruded(m, c, c, d), config)
    return Fraction(whole) == 2 ** (c - d) * Fraction(count_tilings(plus, config)) * count_tilings(minus, config)
