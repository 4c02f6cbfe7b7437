"""Acceptance gate: every primary verification criterion at its stated tolerance.

Each test drives one criterion end to end through vxs.run_criterion and
prints a single PASS/FAIL line; a failing assertion carries the offending
rows.  Runtime budgets are part of the reports (runtimeSeconds rows), so a
blown budget fails the same way a wrong value does.
"""

import pytest

import vxs

THEMES = {
    1: "pole-mean envelope, monotone upper ratio",
    2: "hat-exponent equivalence with explicit constants",
    3: "radial equivalence conditions (v) and (vii)",
    4: "increasing-multiplier inequality",
    5: "Luxemburg norms: values, homogeneity, unit modulars",
    6: "bounded-argument decomposition",
    7: "Carleson boxes, embeddings, escaping atoms",
    8: "subordination and self-map comparisons",
}


@pytest.fixture(scope="module", autouse=True)
def _warm():
    vxs.warmup()


def _run(k):
    rep = vxs.run_criterion(k)
    status = "PASS" if rep.passed else "FAIL"
    print("ACCEPTANCE criterion %d [%s]: %s (%d rows, %.2fs)"
          % (k, THEMES[k], status, len(rep.rows), rep.wall_time))
    bad = [(r.name, r.value, r.bound) for r in rep.rows if r.passed is False]
    assert rep.passed, "criterion %d failed rows: %s" % (k, bad)


def test_criterion_1_pole_mean_envelope():
    _run(1)


def test_criterion_2_hat_equivalence_constants():
    _run(2)


def test_criterion_3_radial_equivalence_conditions():
    _run(3)


def test_criterion_4_increasing_multiplier():
    _run(4)


def test_criterion_5_luxemburg_norms():
    _run(5)


def test_criterion_6_bounded_argument_decomposition():
    _run(6)


def test_criterion_7_carleson_boxes():
    _run(7)


def test_criterion_8_subordination_composition():
    _run(8)


def test_suites_cover_every_criterion():
    assert tuple(vxs.SUITES["all"]) == (1, 2, 3, 4, 5, 6, 7, 8)
    named = sorted(k for name, ks in vxs.SUITES.items()
                   if name != "all" for k in ks)
    assert named == [1, 2, 3, 4, 5, 6, 7, 8]


def test_unknown_criterion_rejected():
    with pytest.raises(vxs.DomainError):
        vxs.run_criterion(9)
