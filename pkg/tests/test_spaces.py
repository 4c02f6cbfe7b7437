"""Luxemburg norms, integral means, Hardy norms, modulars."""

import math

import numpy as np
import pytest

import vxs
from vxs import BergmanWeight


def _kernel_mean_sq(lam, r):
    # M_2(r)^2 of (1-|lam|^2)/(1-lam z)^2 via sum (n+1)^2 x^n = (1+x)/(1-x)^3
    x = (lam * r) ** 2
    return (1.0 - lam * lam) ** 2 * (1.0 + x) / (1.0 - x) ** 3


def test_constant_norm_is_its_value():
    for p in (vxs.constant(2.0), vxs.log_recip_exponent(2.0),
              vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t))):
        got = vxs.luxemburg_norm(vxs.constant_fn(3.0), p, BergmanWeight(0.0))
        assert got == pytest.approx(3.0, rel=1e-8)


def test_monomial_bergman_norms():
    # ||z^k||_{A^2}^2 = 1/(k+1) on the normalized disc
    assert vxs.luxemburg_norm(vxs.monomial(1), vxs.constant(2.0),
                              BergmanWeight(0.0)) == pytest.approx(
        2.0 ** -0.5, rel=1e-8)
    assert vxs.luxemburg_norm(vxs.monomial(3), vxs.constant(2.0),
                              BergmanWeight(0.0)) == pytest.approx(
        0.5, rel=1e-8)
    # alpha = 1: int |z|^4 dA_1 = 2 B(3, 2) = 1/6
    assert vxs.luxemburg_norm(vxs.monomial(2), vxs.constant(2.0),
                              BergmanWeight(1.0)) == pytest.approx(
        6.0 ** -0.5, rel=1e-8)


def test_norm_is_homogeneous():
    f = vxs.kernel(0.5, 2.0, 2.0)
    p = vxs.log_recip_exponent(2.0)
    base = vxs.luxemburg_norm(f, p, BergmanWeight(0.0))
    grown = vxs.luxemburg_norm(vxs.scaled(f, 0.4), p, BergmanWeight(0.0))
    assert grown == pytest.approx(2.5 * base, rel=1e-6)


def test_unit_ball_modular_is_one():
    f = vxs.kernel(0.5, 2.0, 2.0)
    p = vxs.log_recip_exponent(2.0)
    w = BergmanWeight(0.0)
    nrm = vxs.luxemburg_norm(f, p, w)
    mod = vxs.bergman_modular(vxs.scaled(f, nrm), p, w)
    assert not mod.diverged
    assert mod.value == pytest.approx(1.0, abs=1e-6)


def test_bergman_modular_closed_form():
    mod = vxs.bergman_modular(vxs.monomial(1), vxs.constant(2.0),
                              BergmanWeight(0.0))
    assert mod.value == pytest.approx(0.5, rel=1e-10)


def test_integral_mean_of_monomial_is_radius_power():
    # |z^3| is constant on each circle, so any exponent gives r^3
    for p in (vxs.constant(2.0), vxs.log_recip_exponent(2.0)):
        got = vxs.integral_mean(vxs.monomial(3), p, 0.7)
        assert got == pytest.approx(0.7 ** 3, rel=1e-9)


def test_integral_mean_kernel_closed_form():
    got = vxs.integral_mean(vxs.kernel(0.9, 2.0, 2.0), vxs.constant(2.0), 0.9)
    assert got == pytest.approx(math.sqrt(_kernel_mean_sq(0.9, 0.9)),
                                rel=1e-9)


# mpmath, 30 digits: sqrt of sum_{n>=0} (gamma(n+0.4)/(gamma(0.4) n!))^2 0.81^n
POWER_MEAN_AT_09 = 1.1201948703383465


def test_integral_mean_power_function_coefficient_oracle():
    got = vxs.integral_mean(vxs.power_one_minus_z(-0.4), vxs.constant(2.0),
                            0.9)
    assert got == pytest.approx(POWER_MEAN_AT_09, rel=1e-7)


def test_hardy_norm_means_are_nondecreasing():
    radii = tuple(1.0 - 2.0 ** -k for k in range(1, 13))
    hn = vxs.hardy_norm(vxs.kernel(0.6, 2.0, 2.0), vxs.constant(2.0),
                        radii=radii)
    means = np.asarray(hn.means)
    assert np.all(np.diff(means) >= -1e-12)
    assert hn.sup_norm == pytest.approx(float(means[-1]))
    for r, m in zip(radii, means):
        assert m == pytest.approx(math.sqrt(_kernel_mean_sq(0.6, r)),
                                  rel=1e-6)


def test_hardy_norm_flags_growth_without_limit():
    # (1-z)^{-1} is outside the boundary space: means keep climbing
    hn = vxs.hardy_norm(vxs.power_one_minus_z(-1.0), vxs.constant(2.0),
                        radii=tuple(1.0 - 2.0 ** -k for k in range(1, 12)))
    assert not hn.converged
    assert hn.warnings


def test_interval_norm_closed_forms():
    # plain dx on (-1, 1): int |f/lam|^p dx = 1
    assert vxs.interval_norm(vxs.constant_fn(1.0),
                             vxs.constant(2.0)) == pytest.approx(
        math.sqrt(2.0), rel=1e-8)
    # int x^2 dx = 2/3 so lam = sqrt(2/3); int |x|^3 dx = 1/2 so lam = 2^{-1/3}
    assert vxs.interval_norm(vxs.monomial(1),
                             vxs.constant(2.0)) == pytest.approx(
        math.sqrt(2.0 / 3.0), rel=1e-8)
    assert vxs.interval_norm(vxs.monomial(1),
                             vxs.constant(3.0)) == pytest.approx(
        0.5 ** (1.0 / 3.0), rel=1e-8)


def test_not_in_space_raises():
    with pytest.raises(vxs.NotInSpaceError):
        vxs.luxemburg_norm(vxs.power_one_minus_z(-3.0), vxs.constant(2.0),
                           BergmanWeight(0.0))


def test_boundary_weight_requires_hardy_route():
    with pytest.raises(vxs.DomainError):
        vxs.luxemburg_norm(vxs.monomial(1), vxs.constant(2.0),
                           BergmanWeight(-1.0))
    with pytest.raises(vxs.DomainError):
        vxs.bergman_modular(vxs.monomial(1), vxs.constant(2.0),
                            BergmanWeight(-1.0))


def test_norm_of_zero_function_is_zero():
    assert vxs.luxemburg_norm(vxs.constant_fn(0.0), vxs.constant(2.0),
                              BergmanWeight(0.0)) == 0.0
