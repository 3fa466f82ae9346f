import math

import mpmath
import pytest

from rencontres import combinat as C
from rencontres.bounds import (
    BoundDomainError,
    asymptotic_trend,
    bell_asymptotics,
    check_adell,
    check_berend_tal,
    check_lambda_sandwich,
    lambda_sum,
    lambert_w,
    log_of_nat,
)


def test_log_of_nat_examples():
    assert log_of_nat(1) == 0
    assert float(log_of_nat(1024)) == pytest.approx(10 * math.log(2), rel=1e-15)
    assert float(log_of_nat(120)) == pytest.approx(math.log(120), rel=1e-15)
    with pytest.raises(BoundDomainError):
        log_of_nat(0)


def test_log_of_nat_big_values_60_bits():
    for x in (C.factorial(300), C.bell(200), 3**1000 + 7):
        with mpmath.workprec(200):
            ref = mpmath.log(mpmath.mpf(x))
            err = abs(log_of_nat(x) - ref) / ref
        assert err < mpmath.mpf(2) ** -60


def test_lambert_w_examples():
    assert lambert_w(0) == 0
    assert lambert_w(math.e) == pytest.approx(1.0, rel=1e-15)
    w = lambert_w(100)
    assert abs(w * math.exp(w) - 100) <= 1e-10
    with pytest.raises(BoundDomainError):
        lambert_w(-0.1)


@pytest.mark.parametrize("x", [0.5, 1, math.e, 10, 100, 1e6])
def test_lambert_w_residual(x):
    w = lambert_w(x)
    assert abs(w * math.exp(w) - x) / max(x, 1) <= 1e-12
    assert w == pytest.approx(float(mpmath.lambertw(x).real), rel=1e-14)


def test_adell_examples():
    r = check_adell(2, 0)
    assert r.satisfied and float(r.exact) == pytest.approx(math.log(2)) and abs(r.slack) < 1e-25
    r = check_adell(2, 1)
    assert r.satisfied
    assert float(r.exact) == pytest.approx(math.log(3))
    assert float(r.bound) == pytest.approx(math.log(2 * (1 + math.log(2))))
    r = check_adell(10, 10)
    assert r.satisfied and r.exact == 0
    with pytest.raises(BoundDomainError):
        check_adell(1, 0)
    with pytest.raises(BoundDomainError):
        check_adell(5, 6)


def test_adell_sweep():
    for n in range(2, 61):
        for m in range(n + 1):
            assert check_adell(n, m).satisfied, (n, m)


def test_lambda_sum_examples():
    assert lambda_sum(2, 0) == 0
    l2 = math.log(2)
    hand = sum(2 * l2 ** (i - 1) / math.factorial(i - 1) * (1 + (i - 1) / l2) for i in range(1, 4))
    assert float(lambda_sum(2, 1)) == pytest.approx(hand, rel=1e-14)
    assert lambda_sum(3, 2) > lambda_sum(3, 1)
    with pytest.raises(BoundDomainError):
        lambda_sum(1, 3)


def test_lambda_sandwich_examples():
    for n, r in [(5, 2), (8, 3)]:
        rep = check_lambda_sandwich(n, r)
        assert rep.satisfied
        assert rep.extra["lower_satisfied"] and rep.extra["upper_satisfied"]
    with pytest.raises(BoundDomainError):
        check_lambda_sandwich(3, 3)
    with pytest.raises(BoundDomainError):
        check_lambda_sandwich(5, 1)


def test_lambda_sandwich_sweep():
    for r in range(2, 7):
        for n in range(r + 1, 21):
            rep = check_lambda_sandwich(n, r)
            assert rep.satisfied, (n, r)
            # observed, not claimed: the lower bound is never tight here
            assert not rep.extra["lower_tight"]


def test_berend_tal_examples():
    r = check_berend_tal(1)
    assert r.exact == 0 and float(r.bound) == pytest.approx(math.log(0.792 / math.log(2)))
    assert r.satisfied
    r = check_berend_tal(5)
    assert float(r.exact) == pytest.approx(math.log(52))
    assert float(r.bound) == pytest.approx(5 * math.log(0.792 * 5 / math.log(6)))
    assert r.satisfied
    assert check_berend_tal(100).satisfied


def test_berend_tal_sweep():
    assert all(check_berend_tal(n).satisfied for n in range(1, 201))


def test_asymptotics_examples():
    a10 = bell_asymptotics(10)
    assert float(a10.exact) == pytest.approx(math.log(115975))
    assert a10.de_bruijn_error < 0.2 and a10.odlyzko_error < 0.2
    a50 = bell_asymptotics(50)
    assert a50.de_bruijn_error < a10.de_bruijn_error
    assert a50.odlyzko_error < a10.odlyzko_error
    assert bell_asymptotics(200).odlyzko_error < 0.02


def test_asymptotic_trend():
    assert asymptotic_trend([10, 50, 100, 200]) == {"de_bruijn": True, "odlyzko": True}
