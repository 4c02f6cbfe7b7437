"""Analytic building blocks: kernels, Blaschke products, splits, powers."""

import cmath
import math

import numpy as np
import pytest

import vxs


def _ring(radius, n=16):
    return radius * np.exp(1j * np.linspace(0.1, 6.2, n))


def test_kernel_is_one_at_zero_parameter():
    k = vxs.kernel(0.0, 2.0, 2.0)
    z = _ring(0.7)
    assert np.max(np.abs(k(z) - 1.0)) <= 1e-14


def test_kernel_closed_form():
    # lam = 0.5, a = q = 2: (1 - |lam|^2) / (1 - conj(lam) z)^2
    k = vxs.kernel(0.5, 2.0, 2.0)
    z = np.array([0.3 + 0.0j, 0.2 - 0.4j])
    want = 0.75 / (1.0 - 0.5 * z) ** 2
    assert np.max(np.abs(k(z) - want)) <= 1e-13


def test_blaschke_unimodular_on_boundary():
    b = vxs.blaschke([0.5, -0.3, 0.4j])
    z = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False))
    assert np.max(np.abs(np.abs(b(z)) - 1.0)) <= 1e-12


def test_blaschke_zeros_and_origin_normalization():
    zeros = [0.5, -0.3, 0.4j]
    b = vxs.blaschke(zeros)
    for a in zeros:
        assert abs(b(np.array([a]))[0]) <= 1e-13
    # each normalized factor takes the value |a| at 0
    at0 = b(np.array([0.0 + 0j]))[0]
    assert at0 == pytest.approx(0.5 * 0.3 * 0.4, abs=1e-13)


def test_blaschke_with_zero_at_origin():
    b = vxs.blaschke([0.0, 0.0, 0.5])
    assert abs(b(np.array([0.0 + 0j]))[0]) == 0.0
    z = np.exp(1j * np.linspace(0.0, 6.0, 32))
    assert np.max(np.abs(np.abs(b(z)) - 1.0)) <= 1e-12


def test_divide_out_zeros_reconstructs():
    f = vxs.polynomial([-0.15, -0.2, 1.0], zeros=[0.5, -0.3])
    g = vxs.divide_out_zeros(f)
    assert g.zeros == ()
    b = vxs.blaschke([0.5, -0.3])
    z = _ring(0.6, 10)
    assert np.max(np.abs(b(z) * g(z) - f(z))) <= 1e-12
    assert np.min(np.abs(g(z))) > 0.0
    # direct value: g = f / B
    z7 = np.array([0.7 + 0j])
    assert g(z7)[0] == pytest.approx(f(z7)[0] / b(z7)[0], rel=1e-12)


def test_divide_out_zeros_origin_factor():
    f = vxs.polynomial([0.0, 2.0, 1.0], zeros=[0.0])  # z (2 + z)
    g = vxs.divide_out_zeros(f)
    assert g(np.array([0.0 + 0j]))[0] == pytest.approx(2.0, abs=1e-10)


def test_divide_out_zeros_passthrough_without_zeros():
    f = vxs.kernel(0.5, 2.0, 2.0)
    assert vxs.divide_out_zeros(f) is f


def test_riesz_split_sign_parts():
    # f = z has boundary real part cos(t); the nonnegative half has mean
    # value 1/pi, and the two halves subtract back to f
    f = vxs.monomial(1)
    f1, f2 = vxs.riesz_split(f)
    assert f1(np.array([0.0 + 0j]))[0].real == pytest.approx(1.0 / math.pi,
                                                             abs=1e-5)
    z = _ring(0.5, 12)
    assert np.max(np.abs(f1(z) - f2(z) - f(z))) <= 1e-5
    ring = _ring(0.95, 64)
    assert np.min(f1(ring).real) >= -1e-5
    assert np.min(f2(ring).real) >= -1e-5


def test_complex_power_half_identity():
    # needs a certified argument branch; the fractional power carries one
    g = vxs.power_one_minus_z(-0.4)
    ph = vxs.conjugate(vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t)))
    h = vxs.complex_power(g, ph, s=0.5)
    z = _ring(0.5)
    hat = np.asarray(ph.hat_value(z))
    gz = g(z)
    want = np.abs(gz) ** hat.real * np.exp(-hat.imag * np.angle(gz))
    got = np.abs(h(z)) ** 2
    assert np.max(np.abs(got / want - 1.0)) <= 1e-10


def test_complex_power_requires_branch_certificate():
    with pytest.raises(vxs.BranchError):
        vxs.complex_power(vxs.kernel(0.5, 2.0, 2.0),
                          vxs.conjugate(vxs.constant(2.0)), 0.5)


def test_nth_root_cubes_back():
    g = vxs.kernel(0.5, 2.0, 2.0)
    h = vxs.nth_root(g, 3)
    z = _ring(0.6, 12)
    assert np.max(np.abs(h(z) ** 3 - g(z))) <= 1e-10
    at0 = h(np.array([0.0 + 0j]))[0]
    assert abs(at0.imag) <= 1e-12 and at0.real > 0.0


def test_nth_root_rejects_vanishing_center():
    with pytest.raises(vxs.SingularityError):
        vxs.nth_root(vxs.monomial(1), 2)


def test_mobius_involution():
    phi = vxs.mobius(0.5)
    assert phi(np.array([0.0 + 0j]))[0] == pytest.approx(0.5)
    assert abs(phi(np.array([0.5 + 0j]))[0]) <= 1e-15
    z = _ring(0.8, 12)
    assert np.max(np.abs(phi(phi(z)) - z)) <= 1e-12


def test_power_one_minus_z_principal_branch():
    g = vxs.power_one_minus_z(-0.4)
    for z0 in (0.3 + 0.0j, 0.5j, -0.2 + 0.6j):
        want = cmath.exp(-0.4 * cmath.log(1.0 - z0))
        assert g(np.array([z0]))[0] == pytest.approx(want, rel=1e-13)
    assert g.arg_bound == pytest.approx(0.2 * math.pi, abs=1e-15)


def test_carleson_test_function_peak_value():
    phat = vxs.build_complexified({"kind": "constant", "value": 2.0})
    tf = vxs.carleson_test_function(0.9, phat)
    got = abs(tf(np.array([0.9 + 0j]))[0])
    assert got == pytest.approx(0.19 ** -0.5, rel=1e-12)


def test_subordinate_composes_values():
    big_f = vxs.rational([1.0], [1.0, -0.5])
    comp = vxs.subordinate(big_f, vxs.monomial(2))
    z = np.array([0.6 + 0.0j, 0.3 - 0.2j])
    assert np.max(np.abs(comp(z) - 1.0 / (1.0 - 0.5 * z * z))) <= 1e-13


def test_subordinate_rejects_bad_inner_maps():
    big_f = vxs.rational([1.0], [1.0, -0.5])
    with pytest.raises(vxs.SubordinationError):
        vxs.subordinate(big_f, vxs.mobius(0.5))  # omega(0) != 0
    with pytest.raises(vxs.SubordinationError):
        vxs.subordinate(big_f, vxs.from_callable(lambda z: 2.0 * np.asarray(z)))


def test_scaled_divides_by_factor():
    f = vxs.kernel(0.5, 2.0, 2.0)
    g = vxs.scaled(f, 0.2)  # = 5 f
    z = _ring(0.4, 8)
    assert np.max(np.abs(g(z) - 5.0 * f(z))) <= 1e-12
    with pytest.raises(vxs.DomainError):
        vxs.scaled(f, 0.0)


def test_product_multiplies_and_collects_zeros():
    f = vxs.polynomial([0.0, 1.0], zeros=[0.0])
    g = vxs.polynomial([-0.5, 1.0], zeros=[0.5])
    fg = vxs.product([f, g])
    assert tuple(fg.zeros) == (0.0, 0.5)
    z = _ring(0.7, 8)
    assert np.max(np.abs(fg(z) - f(z) * g(z))) <= 1e-14


def test_bounded_arg_decompose_properties():
    phat = vxs.conjugate(vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t)))
    f = vxs.polynomial([-0.15, -0.2, 1.0], zeros=[0.5, -0.3])
    d = vxs.bounded_arg_decompose(f, phat)
    # p_minus = 1.5 forces n = 2, hence three binomial parts
    assert d.n == 2
    assert len(d.parts) == d.n + 1
    assert len(d.pieces) == 2
    assert d.residual <= 1e-6

    z = 0.45 * np.exp(1j * np.linspace(0.2, 6.0, 9))
    total = np.zeros_like(z)
    for part in d.parts:
        total = total + part(z)
    recon = d.blaschke(z) * total
    scale = max(1.0, float(np.max(np.abs(f(z)))))
    assert np.max(np.abs(recon - f(z))) <= 1e-6 * scale

    ring = _ring(0.6, 32)
    for piece in d.pieces:
        assert np.max(np.abs(np.angle(piece(ring)))) <= math.pi / 2.0 + 2e-3


def test_decompose_rejects_zero_function():
    phat = vxs.conjugate(vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t)))
    zero = vxs.constant_fn(0.0)
    with pytest.raises(vxs.DomainError):
        vxs.bounded_arg_decompose(zero, phat)
