"""Quadrature primitives: circle means, radial panels, disc integrals."""

import math

import numpy as np
import pytest

import vxs
from vxs import CircleRule


def test_circle_mean_trig_polynomial_exact():
    # mean of |c0 + c1 z + c2 z^2|^2 over |z| = r is sum |c_k|^2 r^{2k}
    c = (1.0, 0.5, 0.25)
    r = 0.8

    def f(z):
        return np.abs(c[0] + c[1] * z + c[2] * z * z) ** 2

    want = sum(abs(ck) ** 2 * r ** (2 * k) for k, ck in enumerate(c))
    got = vxs.circle_mean(f, r)
    assert got.converged
    assert got.value == pytest.approx(want, rel=1e-12)


def test_circle_mean_geometric_series():
    # |1 - c z|^{-2} averages to 1/(1 - c^2 r^2)
    got = vxs.circle_mean(lambda z: np.abs(1.0 - 0.5 * z) ** -2.0, 0.8).value
    assert got == pytest.approx(1.0 / (1.0 - 0.25 * 0.64), rel=1e-11)


# mpmath hyp2f1(s/2, s/2, 1, r*r) at 30 digits; the last one is 80/27 exactly
POLE_MEANS = {
    (2.5, 0.9): 12.789368023575616,
    (1.5, 0.99): 8.116531121077614,
    (4.0, 0.5): 2.962962962962963,
}


@pytest.mark.parametrize("s,r", sorted(POLE_MEANS))
def test_pole_mean_oracle(s, r):
    got = vxs.circle_mean(lambda z: np.abs(1.0 - z) ** -s, r,
                          CircleRule(rtol=1e-12)).value
    assert got == pytest.approx(POLE_MEANS[(s, r)], rel=1e-9)


@pytest.mark.parametrize("s,r", sorted(POLE_MEANS))
def test_pole_mean_bounds_bracket(s, r):
    lo, hi = vxs.circle_pole_mean_bounds(r, s)
    assert 0.0 < lo <= POLE_MEANS[(s, r)] <= hi


def test_circle_mean_rejects_bad_radius():
    with pytest.raises(vxs.DomainError):
        vxs.circle_mean(lambda z: np.abs(z), 1.5)


def test_integrate_u_polynomial_exact():
    res = vxs.integrate_u(lambda u: 3.0 * u ** 2, 0.5)
    assert res.converged and not res.diverged
    assert res.value == pytest.approx(0.125, rel=1e-12)


def test_integrate_u_inverse_sqrt():
    # int_0^1 u^{-1/2} du = 2; the mass below the deepest panel is
    # recovered by the geometric tail estimate
    res = vxs.integrate_u(lambda u: u ** -0.5, 1.0)
    assert not res.diverged
    assert res.value == pytest.approx(2.0, rel=1e-9)
    assert res.tail_estimate > 0.0


# mpmath quad of exp(sqrt(t) - t) over (9, inf), 30 digits: the exact value
# of int_0^{e^{-9}} exp(sqrt(-log u)) du
SQRTLOG_TAIL = 0.0029418382996729611


def test_integrate_u_sqrtlog_tail_oracle():
    res = vxs.integrate_u(lambda u: np.exp(np.sqrt(-np.log(u))),
                          math.exp(-9.0))
    assert res.value == pytest.approx(SQRTLOG_TAIL, rel=1e-8)


def test_integrate_u_divergence_flag():
    res = vxs.integrate_u(lambda u: u ** -1.2, 1.0)
    assert res.diverged


def test_integrate_u_rejects_empty_range():
    with pytest.raises(vxs.DomainError):
        vxs.integrate_u(lambda u: u, 0.0)


def test_disc_integral_mass_and_moment():
    one = vxs.disc_integral(lambda z: np.ones_like(np.real(z)))
    assert one.value == pytest.approx(1.0, rel=1e-10)
    mom = vxs.disc_integral(lambda z: np.abs(z) ** 2)
    assert mom.value == pytest.approx(0.5, rel=1e-10)


def test_disc_integral_weighted_moment():
    # int |z|^2 dA_alpha = (alpha+1) B(2, alpha+1) = 1/3 at alpha = 1
    mom = vxs.disc_integral(lambda z: np.abs(z) ** 2, vxs.BergmanWeight(1.0))
    assert mom.value == pytest.approx(1.0 / 3.0, rel=1e-10)


def test_log_gamma_matches_lgamma():
    for x in (0.1, 0.5, 1.0, 2.5, 7.0, 31.4, 120.0):
        assert vxs.log_gamma(x) == pytest.approx(math.lgamma(x), abs=1e-12)


def test_bisect_monotone_nonincreasing():
    # contract: h nonincreasing with h(lo) >= target >= h(hi)
    got = vxs.bisect_monotone(lambda x: 8.0 / (x * x), 1.0, 4.0, target=2.0)
    assert got == pytest.approx(2.0, abs=1e-9)
    lin = vxs.bisect_monotone(lambda x: 2.0 - x, 0.0, 2.0)
    assert lin == pytest.approx(1.0, abs=1e-9)


def test_bisect_monotone_requires_bracket():
    with pytest.raises(vxs.BracketError):
        vxs.bisect_monotone(lambda x: x, 2.0, 3.0, target=1.0)
