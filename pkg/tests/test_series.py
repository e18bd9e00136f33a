"""Exact turning-point series against direct multiprecision evaluation."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from besselzeros.series import (
    eval_mp,
    leading_root_series,
    mul,
    phase_series,
    power,
    revert,
    sigma_series,
    zeta_series,
)


def test_power_matches_binomial_expansion():
    # (1 + x)^(1/2) has coefficients binom(1/2, k)
    got = power((Fraction(1), Fraction(1)), Fraction(1, 2), 6)
    expected = [Fraction(1)]
    acc = Fraction(1)
    alpha = Fraction(1, 2)
    for k in range(1, 6):
        acc *= (alpha - (k - 1)) / k
        expected.append(acc)
    assert list(got) == expected


def test_power_requires_unit_constant():
    with pytest.raises(ValueError):
        power((Fraction(2),), Fraction(1, 2), 3)


def test_mul_truncates():
    a = (Fraction(1), Fraction(1))
    assert mul(a, a, 2) == (Fraction(1), Fraction(2))


def test_revert_round_trips():
    a = zeta_series(10)
    b = revert(a, 10)
    # compose u = w a(w) into w(u) and check identity through order 8
    # numerically at a small point instead of symbolically
    with mp.workdps(40):
        w = mpf("1e-3")
        u = w * eval_mp(a, w)
        w_back = eval_mp((Fraction(0),) + tuple(b[1:]), u)
        assert abs(w_back - w) < mpf("1e-30")


def test_phase_series_leading_coefficients():
    assert phase_series(4)[:3] == (Fraction(1), Fraction(-9, 20), Fraction(69, 224))


def test_phase_series_matches_direct_evaluation():
    with mp.workdps(60):
        for wstr in ("1e-2", "1e-3", "1e-5"):
            w = mpf(wstr)
            z = 1 + w
            direct = mp.sqrt(z * z - 1) - mp.acos(1 / z)
            series = (2 * mp.sqrt(2) / 3) * w ** mpf("1.5") * eval_mp(phase_series(30), w)
            # direct evaluation loses ~|log10 w| digits to cancellation
            assert abs(series / direct - 1) < mpf("1e-40")


def test_zeta_and_sigma_series_are_consistent():
    with mp.workdps(60):
        w = mpf("2e-3")
        z = 1 + w
        phi = mp.sqrt(z * z - 1) - mp.acos(1 / z)
        neg_zeta = (3 * phi / 2) ** (mpf(2) / 3)
        zeta = -mp.cbrt(2) * w * eval_mp(zeta_series(30), w)
        assert abs(zeta + neg_zeta) < mpf("1e-45")
        sigma = eval_mp(sigma_series(30), w) / mp.cbrt(2)
        assert abs(sigma - mp.sqrt(neg_zeta / (z * z - 1))) < mpf("1e-45")


def test_sigma_series_turning_point_slope():
    # sigma(1 + w) = 2^(-1/3) (1 - (2/5) w + ...)
    assert sigma_series(3)[:2] == (Fraction(1), Fraction(-2, 5))


def test_leading_root_series_inverts_zeta():
    with mp.workdps(60):
        for wstr in ("5e-3", "1e-4"):
            w = mpf(wstr)
            y = w * eval_mp(zeta_series(30), w)
            w_back = y * eval_mp(leading_root_series(30), y)
            assert abs(w_back / w - 1) < mpf("1e-45")


def test_leading_root_series_leading_coefficient():
    assert leading_root_series(3)[:2] == (Fraction(1), Fraction(3, 10))
