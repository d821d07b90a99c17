import pytest

from hexatile.verify import SUITES, Check, Limits, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_small_sweeps_pass(suite):
    limits = Limits(max_m=3, max_a=1, max_c=3, max_n=2, max_N=2)
    checks = run_suite(suite, limits)
    assert checks and all(c.passed for c in checks), [c.line() for c in checks if not c.passed]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_line_format():
    assert Check("x", (1, 2), True).line() == "PASS x(1, 2)"
    assert Check("x", (1,), False, "1 != 2").line() == "FAIL x(1,)  (1 != 2)"
