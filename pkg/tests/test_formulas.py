import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexatile.exactnum import DomainError, half, shifted_factorial as sf
from hexatile.formulas import (
    Parity,
    TilingCount,
    ciucu_R,
    ciucu_Rbar,
    factorization_identity_check,
    fk_count,
    induction_identity_checks,
    intrusion_count,
    intrusion_ratio,
    macmahon,
    macmahon_product,
    pp_restricted_ratio,
    step_ratio,
)
from hexatile.oracle import count_pp_restricted, count_tilings, enumerate_pp, kuo_terms
from hexatile.region import build_intruded, build_R, build_Rbar

EVEN, ODD = Parity.EVEN, Parity.ODD


def M(m, b, c, d):
    return intrusion_count(m, b, c, d).value


class TestMacMahon:
    def test_examples(self):
        assert macmahon(1, 1, 1).value == 2
        assert macmahon(2, 2, 2).value == 20
        assert macmahon(0, 3, 7).value == 1

    @given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
    def test_forms_agree(self, a, b, c):
        assert macmahon(a, b, c).value == macmahon_product(a, b, c)

    def test_source(self):
        assert macmahon(1, 2, 3).source == "formula:macmahon"


class TestIntrusion:
    def test_ratio_examples(self):
        assert intrusion_ratio(EVEN, 2, 3, 4, 0) == 1
        assert intrusion_ratio(EVEN, 1, 1, 1, 1) == Fraction(1, 3)
        assert intrusion_ratio(ODD, 0, 1, 1, 1) == Fraction(1, 2)

    def test_count_examples(self):
        assert M(2, 1, 1, 1) == 1
        assert M(1, 1, 1, 1) == 1
        assert M(5, 2, 3, 0) == macmahon(5, 2, 3).value

    def test_step_examples(self):
        assert step_ratio(EVEN, 1, 1, 1, 0) == Fraction(1, 3)
        assert step_ratio(ODD, 0, 1, 1, 0) == Fraction(1, 2)
        tele = step_ratio(EVEN, 2, 3, 5, 0) * step_ratio(EVEN, 2, 3, 5, 1)
        assert tele == intrusion_ratio(EVEN, 2, 3, 5, 2)

    def test_parity_parsing(self):
        assert Parity.parse("Odd") is ODD
        assert Parity.of(7) is ODD and Parity.of(4) is EVEN

    def test_domain(self):
        with pytest.raises(DomainError):
            intrusion_count(2, 2, 3, 3)
        with pytest.raises(DomainError):
            intrusion_ratio(EVEN, 1, 1, 1, -1)
        with pytest.raises(DomainError):
            step_ratio(EVEN, 1, 2, 2, 2)

    @given(st.integers(0, 7), st.integers(0, 4), st.integers(0, 4), st.data())
    def test_oracle(self, m, b, c, data):
        d = data.draw(st.integers(0, min(b, c)))
        assert M(m, b, c, d) == count_tilings(build_intruded(m, b, c, d))

    @given(st.integers(0, 9), st.integers(0, 8), st.integers(0, 8), st.data())
    def test_symmetry_and_integrality(self, m, b, c, data):
        d = data.draw(st.integers(0, min(b, c)))
        v = intrusion_count(m, b, c, d)
        assert v.is_integer and v.value > 0
        assert v.value == M(m, c, b, d)

    def test_equal_sides_factor_by_factor(self):
        # the b = c case written out independently
        for a, c in itertools.product(range(4), range(1, 6)):
            for k in range(c):
                even = sf(half(2 * k + 1), c - 2 * k) * sf(a + k + 1, c - 2 * k - 1)
                even /= sf(half(2 * a + 2 * k + 1), c - 2 * k) * sf(k + 1, c - 2 * k - 1)
                assert step_ratio(EVEN, a, c, c, k) == even
                odd = sf(a + k + 1, c - 2 * k) * sf(half(2 * k + 3), c - 2 * k - 2)
                odd /= sf(k + 1, c - 2 * k - 1) * sf(half(2 * a + 2 * k + 3), c - 2 * k - 1) * 4
                assert step_ratio(ODD, a, c, c, k) == odd

    def test_kuo_recurrences_with_formula_terms(self):
        for a, c in itertools.product(range(3), range(1, 5)):
            for b in range(1, c + 1):
                for k in range(b):
                    for variant in ("prime", "double-prime"):
                        (l1, l2), (p1, p2), (q1, q2) = kuo_terms(variant, a, b, c, k)
                        assert M(*l1) * M(*l2) == M(*p1) * M(*p2) + M(*q1) * M(*q2), (variant, a, b, c, k)

    def test_specialized_recurrences(self):
        for a, c in itertools.product(range(3), range(1, 5)):
            for k in range(c):
                assert M(2 * a + 1, c, c, k) * M(2 * a, c, c, k + 1) == 2 * M(2 * a, c, c + 1, k + 1) * M(2 * a + 1, c - 1, c, k)
            for k in range(c):
                assert M(2 * a + 1, c, c, k) * M(2 * a, c, c, k) == 2 * M(2 * a, c, c + 1, k) * M(2 * a + 1, c - 1, c, k)


class TestPlanePartitionRatio:
    def test_examples(self):
        assert pp_restricted_ratio(1, 1, 1, 1) == Fraction(1, 3)
        assert pp_restricted_ratio(2, 4, 3, 0) == 1

    def test_figure_box(self):
        ratio = Fraction(count_pp_restricted(3, 5, 4, 2), enumerate_pp(3, 5, 4))
        assert pp_restricted_ratio(3, 5, 2, 2) == ratio

    def test_domain(self):
        with pytest.raises(DomainError):
            pp_restricted_ratio(3, 2, 1, 1)


class TestFulmekKrattenthaler:
    def test_examples(self):
        assert fk_count(1, 1, 1).value == 1
        assert fk_count(0, 2, 1).value == count_tilings(build_intruded(0, 2, 2, 1))

    def test_equals_intrusion(self):
        for m, N in itertools.product(range(4), range(1, 6)):
            for r in range(1, N + 1):
                assert fk_count(m, N, r).value == M(2 * m, N, N, r), (m, N, r)

    def test_domain(self):
        with pytest.raises(DomainError):
            fk_count(1, 2, 3)
        with pytest.raises(DomainError):
            fk_count(1, 2, 0)


class TestCiucu:
    def test_oracle_examples(self):
        assert ciucu_Rbar(6, 0, 3).value == count_tilings(build_Rbar(6, 0, 3))
        assert ciucu_R(4, 2, 3).value == count_tilings(build_R(4, 2, 3))

    def test_values_are_not_always_integers(self):
        assert ciucu_R(0, 2, 1).value.denominator > 1

    def test_first_step_ratio(self):
        a, c = 1, 2
        lhs = ciucu_Rbar(0, c - 1, a).value / (2 * ciucu_R(0, c, a - 1).value)
        rhs = sf(half(1), c) * sf(a + 1, c - 1) / (sf(half(2 * a + 1), c) * sf(1, c - 1))
        assert lhs == rhs

    def test_later_step_ratios(self):
        for a, c in itertools.product(range(1, 4), range(2, 6)):
            for k in range(1, c):
                lhs = ciucu_Rbar(k, c - k - 1, a).value / (2 * ciucu_Rbar(k - 1, c - k, a).value)
                assert lhs == step_ratio(EVEN, a, c, c, k)

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_oracle(self, m, n, x):
        assert ciucu_R(m, n, x).value == count_tilings(build_R(m, n, x))
        assert ciucu_Rbar(m, n, x).value == count_tilings(build_Rbar(m, n, x))

    def test_edge_case(self):
        for n in range(5):
            assert ciucu_R(0, n, -1).value == count_tilings(build_R(0, n, -1))

    def test_domain(self):
        with pytest.raises(DomainError):
            ciucu_R(1, 1, -1)
        with pytest.raises(DomainError):
            ciucu_Rbar(1, -1, 0)


class TestIdentityChecks:
    @pytest.mark.parametrize("m, c, d", [(2, 3, 1), (2, 2, 2), (3, 3, 0), (5, 4, 4)])
    def test_factorization(self, m, c, d):
        assert factorization_identity_check(m, c, d)

    @pytest.mark.parametrize("params", [(1, 2, 4, 1), (2, 3, 5, 2), (0, 1, 2, 1)])
    def test_induction(self, params):
        report = induction_identity_checks(*params)
        assert report.ok, report.failures
        assert len(report.values) == 12

    def test_sum_to_one_is_exact(self):
        report = induction_identity_checks(3, 4, 6, 3)
        for name in ("even step sums to one", "odd step sums to one"):
            lhs, rhs = report.values[name]
            assert isinstance(lhs, Fraction) and lhs == rhs == 1

    def test_induction_domain(self):
        with pytest.raises(DomainError):
            induction_identity_checks(1, 3, 3, 1)


def test_tiling_count_rejects_negative():
    with pytest.raises(ValueError):
        TilingCount(Fraction(-1), "formula:test")
    with pytest.raises(ValueError):
        int(TilingCount(Fraction(1, 2), "formula:test"))
