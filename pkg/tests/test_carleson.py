"""Carleson squares, atomic measures, and embedding diagnostics."""

import math

import numpy as np
import pytest

import vxs
from vxs import CarlesonSquare, DiscMeasure


def test_area_measure_is_normalized():
    mu = DiscMeasure.area(100, 100)
    assert mu.mass == pytest.approx(1.0, rel=1e-12)
    assert len(mu) == 10000


def test_single_atom_mass():
    mu = DiscMeasure.single_atom(0.5 + 0.1j, weight=0.25)
    assert mu.mass == pytest.approx(0.25)
    assert len(mu) == 1


def test_measure_domain_errors():
    with pytest.raises(vxs.DomainError):
        DiscMeasure.single_atom(1.0)
    with pytest.raises(vxs.DomainError):
        DiscMeasure.single_atom(0.5, weight=-1.0)
    with pytest.raises(vxs.DomainError):
        CarlesonSquare(0.0)
    with pytest.raises(vxs.DomainError):
        CarlesonSquare(3.0)


def test_square_membership_geometry():
    # S(h, theta0) needs r >= 1-h and |t - theta0| <= h/2
    mu = DiscMeasure.single_atom(0.95 * np.exp(0.1j))
    assert vxs.square_mass(mu, CarlesonSquare(0.1, 0.1)) == pytest.approx(1.0)
    assert vxs.square_mass(mu, CarlesonSquare(0.04, 0.1)) == 0.0
    assert vxs.square_mass(mu, CarlesonSquare(0.1, 0.16)) == 0.0


def test_square_mass_of_area_measure():
    # exact normalized area of S(h): h(1 - (1-h)^2) / (2 pi)
    h = 0.25
    exact = h * (1.0 - (1.0 - h) ** 2) / (2.0 * math.pi)
    mu = DiscMeasure.area(400, 400)
    got = vxs.square_mass(mu, CarlesonSquare(h))
    assert got == pytest.approx(exact, rel=0.02)


def test_square_mass_monotone_in_h():
    mu = DiscMeasure.area(200, 200)
    masses = [vxs.square_mass(mu, CarlesonSquare(h))
              for h in (0.1, 0.2, 0.4, 0.8)]
    assert all(a <= b for a, b in zip(masses, masses[1:]))


def test_box_condition_single_deep_atom():
    mu = DiscMeasure.single_atom(1.0 - 2.0 ** -10)
    rep = vxs.box_condition_sup(mu, a=2.0)
    assert rep.sup_value == 2.0 ** 20
    assert rep.unbounded
    assert not rep.passed
    assert rep.witness == pytest.approx(2.0 ** -10)


def test_box_condition_area_measure_bounded():
    rep = vxs.box_condition_sup(DiscMeasure.area(40, 40), a=2.0)
    assert not rep.unbounded
    assert rep.passed
    assert rep.sup_value < 1.0e3


def test_measure_luxemburg_closed_forms():
    p = vxs.constant(2.0)
    f = vxs.constant_fn(2.0)
    assert vxs.measure_luxemburg(
        f, p, DiscMeasure.single_atom(0.3, weight=1.0)) == pytest.approx(2.0)
    # weight 4: need (2/lam)^2 * 4 = 1, so lam = 4
    assert vxs.measure_luxemburg(
        f, p, DiscMeasure.single_atom(0.3, weight=4.0)) == pytest.approx(4.0)


def test_embedding_sup_needs_phat_for_default_suite():
    with pytest.raises(vxs.DomainError):
        vxs.embedding_sup(DiscMeasure.area(20, 20), vxs.constant(2.0))


def test_embedding_sup_area_measure_bounded():
    phat = vxs.conjugate(vxs.constant(2.0))
    radii = tuple(1.0 - 2.0 ** -k for k in range(1, 8))
    rep = vxs.embedding_sup(DiscMeasure.area(40, 40), vxs.constant(2.0),
                            phat=phat, radii=radii)
    assert rep.passed, [(r.name, r.value, r.bound) for r in rep.rows]
    assert all(r.value < 10.0 for r in rep.rows)


def test_escaping_atoms_break_the_embedding():
    p = vxs.harmonic_extend(lambda t: 2.0 + 0.5 * np.cos(t))
    phat = vxs.conjugate(p)
    rep = vxs.escaping_atom_ratios(p, phat, ks=(4, 5, 6))
    assert rep.passed, [(r.name, r.value, r.bound) for r in rep.rows]
    ratios = [r.value for r in rep.rows if r.name.startswith("ratio@")]
    assert len(ratios) == 3
    assert all(a < b for a, b in zip(ratios, ratios[1:]))


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "mu.csv"
    path.write_text("# re, im, weight\n0.5,0.0,1.0\n0.0,0.25,2.5\n")
    mu = DiscMeasure.from_csv(str(path))
    assert mu.mass == pytest.approx(3.5)
    assert len(mu) == 2
    assert np.allclose(sorted(mu.atoms, key=abs), [0.25j, 0.5])


def test_csv_wrong_shape_rejected(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("0.5,0.0\n0.1,0.2\n")
    with pytest.raises(vxs.SchemaError):
        DiscMeasure.from_csv(str(path))
