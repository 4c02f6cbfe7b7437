"""Variable exponents: profiles, estimators, harmonic extension, conjugates."""

import math

import numpy as np
import pytest

import vxs


def _at(p, u, theta=0.0):
    return float(np.asarray(p.value_u_theta(u, theta)).ravel()[0])


def test_constant_exponent_shape():
    p = vxs.constant(2.5)
    assert p.is_radial
    assert p.p_minus == p.p_plus == 2.5
    assert p.value_z(np.array([0.1 + 0.2j]))[0] == 2.5
    assert vxs.log_holder_estimate(p, sample_count=2000) == 0.0


def test_harmonic_extend_reproduces_trig_boundary():
    p = vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t))
    for r, th in ((0.0, 0.0), (0.3, 1.0), (0.9, 2.5), (0.99, -1.2)):
        want = 2.0 + 0.5 * r * math.cos(th)
        assert _at(p, 1.0 - r, th) == pytest.approx(want, abs=1e-10)
    assert p.p_minus == pytest.approx(1.5, abs=1e-6)
    assert p.p_plus == pytest.approx(2.5, abs=1e-6)
    assert not p.is_radial


def test_harmonic_extend_rejects_nonpositive_boundary():
    with pytest.raises(vxs.DomainError):
        vxs.harmonic_extend(lambda t: 1.0 + 2.0 * np.cos(t))


def test_conjugate_closed_form():
    # boundary 2 + 0.5 cos(2t) + 0.3 sin(t) completes analytically to
    # 2 - 0.3 i z + 0.5 z^2, so p_tilde = Im P = 0.5 Im z^2 - 0.3 Re z
    p = vxs.harmonic_extend(
        lambda t: 2.0 + 0.5 * np.cos(2.0 * t) + 0.3 * np.sin(t))
    ph = vxs.conjugate(p)
    z = 0.5 * np.exp(1j * math.pi / 3.0)
    want = 0.5 * (z * z).imag - 0.3 * z.real
    got = float(np.asarray(ph.p_tilde_value(np.array([z]))).ravel()[0])
    assert got == pytest.approx(want, abs=1e-10)
    at0 = float(np.asarray(ph.p_tilde_value(np.array([0.0 + 0j]))).ravel()[0])
    assert at0 == pytest.approx(0.0, abs=1e-12)


def test_complexified_hat_combines_parts():
    ph = vxs.conjugate(vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t)))
    z = np.array([0.2 + 0.4j])
    hat = np.asarray(ph.hat_value(z)).ravel()[0]
    assert hat.real == pytest.approx(
        float(np.asarray(ph.p_value(z)).ravel()[0]), abs=1e-12)
    assert hat.imag == pytest.approx(
        float(np.asarray(ph.p_tilde_value(z)).ravel()[0]), abs=1e-12)


def test_conjugate_of_constant_vanishes():
    ph = vxs.conjugate(vxs.constant(2.0))
    z = np.array([0.3 + 0.2j, -0.6j])
    assert np.max(np.abs(np.asarray(ph.p_tilde_value(z)))) == 0.0


def test_conjugate_rejects_radial():
    with pytest.raises(vxs.NotHarmonicError):
        vxs.conjugate(vxs.log_recip_exponent(2.0))


def test_log_recip_radial_estimate_recovers_constant():
    est = vxs.radial_log_holder_estimate(vxs.log_recip_exponent(2.0, 1.0, 0.5))
    assert est == pytest.approx(1.0, rel=1e-6)


def test_log_holder_estimate_stability():
    p = vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t))
    est = vxs.log_holder_estimate(p, sample_count=5000)
    est2 = vxs.log_holder_estimate(p, sample_count=20000)
    assert 0.0 < est < 10.0
    assert est2 == pytest.approx(est, rel=0.25)


def test_limsup_block_edges_monotone():
    e = vxs.limsup_block_edges(2.0, 4.0, n_blocks=12)
    assert len(e) == 12
    assert all(0.0 < b < 1.0 for b in e)
    assert all(e[i] > e[i + 1] for i in range(len(e) - 1))
    # edge n sits inside the dyadic block (2^{-n}, 2^{-n+1})
    for n, ed in enumerate(e, start=1):
        assert 2.0 ** -n < ed < 2.0 ** (-n + 1)


def test_limsup_exponent_two_values_split_at_edges():
    p = vxs.make_limsup_exponent(2.0, 4.0)
    assert (p.p_minus, p.p_plus) == (2.0, 4.0)
    assert p.is_radial
    assert len(p.breakpoints_u) > 0
    edges = vxs.limsup_block_edges(2.0, 4.0, n_blocks=6)
    for ed in edges[:3]:
        assert _at(p, ed * 0.995) == 2.0
        assert _at(p, min(ed * 1.005, 0.999)) == 4.0


def test_sqrt_log_exponent_profile_and_weight():
    p = vxs.make_sqrt_log_exponent(2.0)
    u = math.exp(-25.0)
    assert _at(p, u) == pytest.approx(2.2, abs=1e-12)
    w = vxs.comparison_weight(p, 2.0)
    got = float(np.asarray(w(np.array([u]))).ravel()[0])
    assert got == pytest.approx(math.exp(5.0), rel=1e-10)


def test_linear_radial_exponent_profile():
    p = vxs.linear_radial_exponent(2.0, 0.7)
    assert p.is_radial
    assert p.p_minus == pytest.approx(2.0)
    assert p.p_plus == pytest.approx(2.7)
    assert _at(p, 0.25) == pytest.approx(2.175, abs=1e-12)


def test_constantize_radially_takes_boundary_value():
    p = vxs.constantize_radially(vxs.log_recip_exponent(2.0))
    assert p.p_minus == p.p_plus == pytest.approx(2.0)
    q = vxs.constantize_radially(vxs.constant(3.0))
    assert q.p_minus == q.p_plus == 3.0
