"""JSON spec grammar and the command-line driver."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

import vxs
from vxs import cli
from vxs.specs import build_exponent, build_function, build_measure


def _at(f, z):
    return complex(np.asarray(f(np.array([z], dtype=complex))).ravel()[0])


def _cfg(tmp_path, payload, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def _run(capsys, argv):
    rc = cli.main(argv)
    out = capsys.readouterr().out
    return rc, (json.loads(out) if out.strip() else None)


# ---------------------------------------------------------------------------
# exponent specs


def test_build_exponent_kinds():
    p = build_exponent({"kind": "constant", "value": 3})
    assert float(p.value_z(np.array([0.2 + 0.1j]))[0]) == 3.0

    p = build_exponent({"kind": "logrecip", "q": 2, "c": 1, "r0": 0.5})
    assert p.is_radial and p.p_minus == pytest.approx(2.0)

    p = build_exponent({"kind": "linear", "q": 2, "c": 0.7})
    assert float(p.value_u_theta(np.array([0.25]), 0.0)[0]) == pytest.approx(
        2.175)

    p = build_exponent({"kind": "limsup", "q": 2, "P": 4})
    assert (p.p_minus, p.p_plus) == (2.0, 4.0)

    p = build_exponent({"kind": "sqrtlog", "q": 2})
    assert p.p_minus == pytest.approx(2.0)
    assert p.p_plus == pytest.approx(3.0)


def test_build_exponent_fourier():
    p = build_exponent({"kind": "fourier", "coefficients": [2.0, 0.5]})
    assert not p.is_radial
    z = np.array([0.0 + 0.0j, 0.5 + 0.0j])
    vals = np.asarray(p.value_z(z), dtype=float).ravel()
    assert vals[0] == pytest.approx(2.0)
    assert vals[1] == pytest.approx(2.25)
    # [re, im] form: Re(0.5i z) vanishes on the real axis
    p = build_exponent({"kind": "fourier",
                        "coefficients": [2.0, [0.0, 0.5]]})
    z = np.array([0.5 + 0.0j, 0.5j])
    vals = np.asarray(p.value_z(z), dtype=float).ravel()
    assert vals[0] == pytest.approx(2.0)
    assert vals[1] == pytest.approx(1.75)


def test_build_exponent_boundary_of_radial():
    p = build_exponent({"kind": "boundary",
                        "of": {"kind": "logrecip", "q": 2}})
    assert p.is_radial
    assert p.p_minus == p.p_plus == pytest.approx(2.0)


def test_build_exponent_schema_errors():
    with pytest.raises(vxs.SchemaError):
        build_exponent({"kind": "frobnicate"})
    with pytest.raises(vxs.SchemaError):
        build_exponent({"kind": "constant", "value": 2, "fancy": 1})
    with pytest.raises(vxs.SchemaError):
        build_exponent({"kind": "logrecip"})
    with pytest.raises(vxs.SchemaError):
        build_exponent({"kind": "constant", "value": True})


# ---------------------------------------------------------------------------
# function specs


def test_build_function_types():
    f = build_function({"type": "constant", "value": 2})
    assert _at(f, 0.0j) == pytest.approx(2.0)

    f = build_function({"type": "monomial", "degree": 3, "coefficient": 2})
    assert _at(f, 0.5 + 0.0j) == pytest.approx(0.25)

    f = build_function({"type": "polynomial", "coefficients": [1, -0.5]})
    assert _at(f, 0.5 + 0.0j) == pytest.approx(0.75)

    f = build_function({"type": "rational", "numerator": [1],
                        "denominator": [1, -0.5]})
    assert _at(f, 0.5 + 0.0j) == pytest.approx(1.0 / 0.75)

    f = build_function({"type": "kernel", "lambda": 0.5, "a": 2, "q": 2})
    assert _at(f, 0.0j) == pytest.approx(0.75)

    f = build_function({"type": "blaschke", "zeros": [0.5, [0.0, 0.3]]})
    assert abs(_at(f, 0.5 + 0.0j)) == pytest.approx(0.0, abs=1e-14)
    assert abs(_at(f, 0.3j)) == pytest.approx(0.0, abs=1e-14)

    f = build_function({"type": "mobius", "lambda": 0.5})
    assert _at(f, 0.0j) == pytest.approx(0.5)

    f = build_function({"type": "power1mz", "exponent": -0.4})
    assert _at(f, 0.0j) == pytest.approx(1.0)

    f = build_function({"type": "product", "factors": [
        {"type": "monomial", "degree": 1}, {"type": "constant", "value": 3}]})
    assert _at(f, 0.5 + 0.0j) == pytest.approx(1.5)

    f = build_function({"type": "composition",
                        "outer": {"type": "rational", "numerator": [1],
                                  "denominator": [1, -0.5]},
                        "inner": {"type": "monomial", "degree": 2}})
    assert _at(f, 0.5 + 0.0j) == pytest.approx(1.0 / (1.0 - 0.125))


def test_build_function_testfn_needs_phat():
    with pytest.raises(vxs.SchemaError):
        build_function({"type": "testfn", "z0": 0.9})
    phat = vxs.conjugate(vxs.constant(2.0))
    f = build_function({"type": "testfn", "z0": 0.9}, phat=phat)
    assert abs(_at(f, 0.9 + 0.0j)) == pytest.approx(0.19 ** -0.5,
                                                        rel=1e-12)


def test_build_measure_types(tmp_path):
    mu = build_measure({"type": "atoms",
                        "atoms": [[0.5, 0.0, 1.0], [0.0, 0.25, 2.5]]})
    assert mu.mass == pytest.approx(3.5)

    mu = build_measure({"type": "atom", "radius": 0.9, "theta": 0.0,
                        "weight": 2.0})
    assert mu.mass == pytest.approx(2.0)
    assert len(mu) == 1

    mu = build_measure({"type": "area", "radial": 20, "angular": 20})
    assert mu.mass == pytest.approx(1.0)
    assert len(mu) == 400

    path = tmp_path / "mu.csv"
    path.write_text("0.5,0.0,1.5\n")
    mu = build_measure({"type": "csv", "path": str(path)})
    assert mu.mass == pytest.approx(1.5)


# ---------------------------------------------------------------------------
# CLI


def test_cli_norm_constant(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"f": "const 3", "p": "const 2"})
    rc, payload = _run(capsys, ["norm", "--config", cfg])
    assert rc == 0
    assert payload["passed"] is True
    assert payload["meta"]["seed"] == 20240
    assert set(payload) >= {"command", "digest", "meta", "passed", "rows",
                            "wallTime"}
    rows = {r["name"]: r["value"] for r in payload["rows"]}
    assert rows["norm"] == pytest.approx(3.0, rel=1e-8)


def test_cli_equiv_limsup_condition_v_passes(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"check": "v", "p": "limsup q=2 P=4"})
    rc, payload = _run(capsys, ["equiv", "--config", cfg])
    assert rc == 0
    rows = {r["name"]: r["value"] for r in payload["rows"]}
    assert rows["supValue"] < 2.0


def test_cli_equiv_sqrtlog_condition_v_fails(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"check": "v", "p": "sqrtlog 2"})
    rc, payload = _run(capsys, ["equiv", "--config", cfg])
    assert rc == 1
    assert payload["passed"] is False


def test_cli_rejects_unknown_key(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"f": "const 3", "p": "const 2", "bogus": 1})
    rc, payload = _run(capsys, ["norm", "--config", cfg])
    assert rc == 2
    assert payload is None


def test_cli_rejects_command_mismatch(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"command": "norm", "f": "const 3", "p": "const 2"})
    rc, _ = _run(capsys, ["mean", "--config", cfg])
    assert rc == 2


def test_cli_mean_writes_csv(tmp_path, capsys):
    out_csv = tmp_path / "means.csv"
    cfg = _cfg(tmp_path, {"f": "monomial 3", "p": "const 2",
                          "r": [0.5, 0.7], "csv": str(out_csv)})
    rc, payload = _run(capsys, ["mean", "--config", cfg])
    assert rc == 0
    rows = {r["name"]: r["value"] for r in payload["rows"]}
    assert rows["mean(r=0.5)"] == pytest.approx(0.125, rel=1e-9)
    assert rows["mean(r=0.7)"] == pytest.approx(0.343, rel=1e-9)
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "r,mean"
    assert len(lines) == 3


def test_cli_digest_depends_only_on_inputs(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"check": "incmult", "trials": 3})
    rc1, p1 = _run(capsys, ["equiv", "--config", cfg])
    rc2, p2 = _run(capsys, ["equiv", "--config", cfg])
    rc3, p3 = _run(capsys, ["equiv", "--config", cfg, "--seed", "7"])
    assert rc1 == rc2 == rc3 == 0
    assert p1["digest"] == p2["digest"]
    assert p3["digest"] != p1["digest"]


def test_cli_construct_limsup(tmp_path, capsys):
    cfg = _cfg(tmp_path, {"p": "limsup q=2 P=4"})
    rc, payload = _run(capsys, ["construct", "--config", cfg])
    assert rc == 0
    rows = {r["name"]: r["value"] for r in payload["rows"]}
    assert rows["pMinus"] == 2.0
    assert rows["pPlus"] == 4.0
    assert rows["isRadial"] == 1.0
    assert rows["breakpointCount"] >= 12


def test_cli_verify_named_suite(capsys):
    rc, payload = _run(capsys, ["verify", "--suite", "lemma-poisson"])
    assert rc == 0
    assert payload["passed"] is True


def test_cli_out_file_matches_stdout(tmp_path, capsys):
    out = tmp_path / "report.json"
    cfg = _cfg(tmp_path, {"f": "const 3", "p": "const 2"})
    rc, _ = _run(capsys, ["norm", "--config", cfg, "--out", str(out)])
    assert rc == 0
    saved = json.loads(out.read_text())
    assert saved["rows"][0]["value"] == pytest.approx(3.0, rel=1e-8)
    assert "digest" in saved


def test_numpy_backend_subprocess(tmp_path):
    env = dict(os.environ, VXS_BACKEND="numpy")
    got = subprocess.run(
        [sys.executable, "-c", "import vxs; print(vxs.BACKEND_NAME)"],
        capture_output=True, text=True, env=env, check=True)
    assert got.stdout.strip() == "numpy"

    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"f": "monomial 1", "p": "const 2"}))
    got = subprocess.run(
        [sys.executable, "-m", "vxs.cli", "norm", "--config", str(cfg)],
        capture_output=True, text=True, env=env)
    assert got.returncode == 0, got.stderr
    payload = json.loads(got.stdout)
    rows = {r["name"]: r["value"] for r in payload["rows"]}
    assert rows["norm"] == pytest.approx(2.0 ** -0.5, rel=1e-8)
