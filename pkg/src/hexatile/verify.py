"""Named verification suites: each sweeps a parameter box and checks one
family of identities exactly.  Used by ``hexatile verify`` and the tests."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import asymptotics as asy
from . import formulas as fm
from .oracle import (
    OracleConfig,
    count_pp_restricted,
    count_tilings,
    count_tilings_lgv,
    enumerate_pp,
    kuo_check,
    kuo_term_mismatches,
)
from .region import build_hexagon, build_intruded, build_R, build_Rbar, split_factorization

__all__ = ["Check", "Limits", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    params: tuple
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"{status} {self.name}{self.params}{extra}"


@dataclass(frozen=True)
class Limits:
    """Sweep bounds; ``None`` means the suite's own default."""

    max_m: int | None = None
    max_a: int | None = None
    max_c: int | None = None
    max_n: int | None = None
    max_N: int | None = None
    oracle: OracleConfig = field(default_factory=OracleConfig.from_env)

    def get(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v


def _eq(name, params, lhs, rhs) -> Check:
    ok = lhs == rhs
    return Check(name, params, ok, "" if ok else f"{lhs} != {rhs}")


def _formulas(lim: Limits) -> Iterator[Check]:
    cfg = lim.oracle
    max_m, max_c = lim.get("max_m", 7), lim.get("max_c", 5)
    for m, c in itertools.product(range(max_m + 1), range(max_c + 1)):
        for b in range(c + 1):
            for d in range(b + 1):
                yield _eq("intrusion=oracle", (m, b, c, d), fm.intrusion_count(m, b, c, d).value,
                          count_tilings(build_intruded(m, b, c, d), cfg))
    for a, b, c in itertools.product(range(5), repeat=3):
        mac = fm.macmahon(a, b, c).value
        ok = mac == count_tilings_lgv(a, b, c) == count_tilings(build_hexagon(a, b, c), cfg) == fm.macmahon_product(a, b, c)
        yield Check("macmahon=lgv=oracle", (a, b, c), ok)
    for m, N in itertools.product(range(4), range(1, 6)):
        for r in range(1, N + 1):
            yield _eq("fk=intrusion", (m, N, r), fm.fk_count(m, N, r).value, fm.intrusion_count(2 * m, N, N, r).value)
    for a, c in itertools.product(range(lim.get("max_a", 3) + 1), range(2, max_c + 2)):
        for b in range(1, c):
            for t in range(1, b + 1):
                rep = fm.induction_identity_checks(a, b, c, t)
                yield Check("induction identities", (a, b, c, t), rep.ok, ", ".join(rep.failures))


def _kuo(lim: Limits) -> Iterator[Check]:
    for a, c in itertools.product(range(lim.get("max_a", 2) + 1), range(1, lim.get("max_c", 4) + 1)):
        for b in range(1, c + 1):
            for variant in ("prime", "double-prime"):
                top = min(b, c) - (1 if variant == "prime" else 0)
                for k in range(top + 1):
                    yield Check(f"kuo {variant}", (a, b, c, k), kuo_check(variant, a, b, c, k, lim.oracle))
                    bad = [t for t in kuo_term_mismatches(variant, a, b, c, k, lim.oracle) if t[1] is not None]
                    yield Check(f"kuo {variant} terms are intruded hexagons", (a, b, c, k), not bad, str(bad))


def _factorization(lim: Limits) -> Iterator[Check]:
    cfg = lim.oracle
    for a, c in itertools.product(range(lim.get("max_a", 2) + 1), range(lim.get("max_c", 4) + 1)):
        for d in range(c + 1):
            for m in (2 * a, 2 * a + 1):
                yield Check("factorization", (m, c, d), fm.factorization_identity_check(m, c, d, cfg))
            if c == 0:
                continue
            # the two halves are Ciucu regions once forced lozenges are gone
            for m in (2 * a, 2 * a + 1):
                plus, minus = split_factorization(m, c, d)
                if m % 2 == 0:
                    want_minus = fm.ciucu_Rbar(c - 1, 0, a).value
                    want_plus = fm.ciucu_R(0, c, a - 1).value if d == 0 else fm.ciucu_Rbar(d - 1, c - d, a).value
                else:
                    want_minus = fm.ciucu_Rbar(c, 0, a).value
                    want_plus = fm.ciucu_R(d, c - d - 1, a).value if d < c else fm.ciucu_Rbar(c, 0, a).value
                yield _eq("minus half = Ciucu", (m, c, d), Fraction(count_tilings(minus, cfg)), want_minus)
                yield _eq("plus half = Ciucu", (m, c, d), Fraction(count_tilings(plus, cfg)), want_plus)


def _ciucu(lim: Limits) -> Iterator[Check]:
    cfg = lim.oracle
    top = lim.get("max_n", 4)
    for m, n, x in itertools.product(range(top + 1), range(top + 1), range(4)):
        yield _eq("R formula=oracle", (m, n, x), fm.ciucu_R(m, n, x).value, Fraction(count_tilings(build_R(m, n, x), cfg)))
        yield _eq("Rbar formula=oracle", (m, n, x), fm.ciucu_Rbar(m, n, x).value,
                  Fraction(count_tilings(build_Rbar(m, n, x), cfg)))
    for n in range(top + 1):
        yield _eq("R formula=oracle", (0, n, -1), fm.ciucu_R(0, n, -1).value, Fraction(count_tilings(build_R(0, n, -1), cfg)))


def _pp(lim: Limits) -> Iterator[Check]:
    for b, c, h in itertools.product(range(4), range(4), range(5)):
        yield _eq("plane partitions=macmahon", (b, c, h), enumerate_pp(b, c, h), fm.macmahon(b, c, h).value)
    for a, c in itertools.product(range(lim.get("max_a", 2) + 1), range(lim.get("max_c", 3) + 1)):
        for b in range(c + 1):
            for d in range(b + 1):
                n = count_pp_restricted(b, c, 2 * a, d)
                yield _eq("restricted pp=intrusion", (a, b, c, d), n, fm.intrusion_count(2 * a, b, c, d).value)
                yield _eq("restricted pp ratio", (a, b, c, d), Fraction(n, enumerate_pp(b, c, 2 * a)),
                          fm.pp_restricted_ratio(b, c, a, d))


def _barnes(lim: Limits) -> Iterator[Check]:
    top_N = lim.get("max_N", 3)
    for a, d, b, c, N in itertools.product(range(1, 3), range(1, 3), range(1, 4), range(1, 4), range(1, top_N + 1)):
        for which in asy.BARNES_IDENTITIES:
            if which == "shift-b" and d > b or which == "shift-c" and d > c:
                continue
            if which == "gap" and ((b + c) % 2 or b + c < 2 * d):
                continue
            yield Check(f"barnes {which}", (a, b, c, d, N), asy.barnes_product_identity_check(which, a, b, c, d, N))
        if (c - b) % 2 == 0 and d <= min(b, c):
            yield Check("factorial product", (a, b, c, d, N), asy.factorial_product_check(a, b, c, d, N))
    ratio = asy.barnes_asymptotic_ratio(200)
    yield Check("G(n+1) asymptotic ratio", (200,), abs(ratio - 1) < 1e-3, str(ratio))


SUITES: dict[str, Callable[[Limits], Iterator[Check]]] = {
    "formulas": _formulas,
    "kuo": _kuo,
    "factorization": _factorization,
    "ciucu": _ciucu,
    "pp": _pp,
    "barnes": _barnes,
}


def run_suite(name: str, limits: Limits | None = None) -> list[Check]:
    limits = limits or Limits()
    if name == "all":
        return [chk for suite in SUITES.values() for chk in suite(limits)]
    if name not in SUITES:
        raise KeyError(name)
    return list(SUITES[name](limits))
