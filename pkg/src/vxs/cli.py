"""Command-line front end.

Usage: vxs <command> --config <file.json> [--seed N] [--out report.json]

Commands: norm, mean, equiv, carleson, littlewood, verify, construct.
The config is a flat JSON object; unknown keys are rejected.  Function
and exponent fields accept either the full object grammar (see specs)
or a compact shorthand string such as "const 2", "limsup q=2 P=4",
"kernel lambda=0.5 a=2 q=2".

Exit codes: 0 all rows passed, 1 some inequality failed or an unbounded
verdict fired, 2 invalid input, 3 numerical non-convergence.
"""

import argparse
import hashlib
import json
import math
import os
import sys

import numpy as np

from .carleson import CarlesonSquare, box_condition_sup, embedding_sup, \
    escaping_atom_ratios, square_mass
from .equivalence import RadialEquivParams, StepFunction, composition_check, \
    condition_v, condition_vi, condition_vii, growth_lemma_check, \
    hat_equivalence_check, inc_mult_check, kernel_mean_estimate_check, \
    littlewood_check, random_step, separation_witness
from .errors import AccuracyError, BracketError, BranchError, DomainError, \
    EvaluationError, NotHarmonicError, NotInSpaceError, SchemaError, \
    SingularityError, SubordinationError
from .numerics import BergmanWeight
from .report import Report
from .spaces import hardy_norm, integral_mean, luxemburg_norm
from .specs import as_int, as_real, as_real_list, build_complexified, \
    build_exponent, build_function, build_measure, check_keys
from .verify import SUITES, run_suite, warmup

_COMMANDS = ("norm", "mean", "equiv", "carleson", "littlewood", "verify",
             "construct")

# ---------------------------------------------------------------------------
# shorthand specs

_EXP_ALIAS = {"const": "constant", "log": "logrecip"}
_FN_ALIAS = {"const": "constant", "poly": "polynomial", "power": "power1mz"}
# kinds that accept one bare positional value, and the field it fills
_EXP_POSITIONAL = {"constant": "value", "logrecip": "q", "sqrtlog": "q"}
_FN_POSITIONAL = {"constant": "value", "monomial": "degree",
                  "power1mz": "exponent", "mobius": "lambda"}


def _token_value(text):
    """Parse a shorthand token value: JSON scalar/list, else complex."""
    try:
        return json.loads(text)
    except ValueError:
        pass
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_token_value(t.strip()) for t in inner.split(",")]
    try:
        c = complex(text)
    except ValueError:
        raise SchemaError("cannot parse shorthand value %r" % text)
    return [c.real, c.imag]


def _shorthand(text, which):
    parts = text.split()
    if not parts:
        raise SchemaError("empty %s shorthand" % which)
    alias = _EXP_ALIAS if which == "exponent" else _FN_ALIAS
    head = alias.get(parts[0].lower(), parts[0].lower())
    key = "kind" if which == "exponent" else "type"
    spec = {key: head}
    positional = (_EXP_POSITIONAL if which == "exponent"
                  else _FN_POSITIONAL)
    for tok in parts[1:]:
        if "=" in tok:
            k, _, v = tok.partition("=")
            spec[k] = _token_value(v)
        else:
            fld = positional.get(head)
            if fld is None or fld in spec:
                raise SchemaError("unexpected bare token %r in %r"
                                  % (tok, text))
            spec[fld] = _token_value(tok)
    return spec


def _spec_of(value, which, ctx):
    if isinstance(value, str):
        return _shorthand(value, which)
    if isinstance(value, dict):
        return value
    raise SchemaError("%s must be a JSON object or a shorthand string" % ctx)


def _needs_phat(spec):
    """True when building the function requires the complexified exponent."""
    if not isinstance(spec, dict):
        return False
    t = spec.get("type")
    if t == "testfn":
        return True
    if t == "product":
        factors = spec.get("factors", ())
        return isinstance(factors, list) and any(_needs_phat(s)
                                                 for s in factors)
    if t == "composition":
        return _needs_phat(spec.get("outer")) or _needs_phat(spec.get("inner"))
    return False


def _radii_of(cfg, key="radii"):
    if key not in cfg:
        return None
    return tuple(as_real_list(cfg[key], key))


# ---------------------------------------------------------------------------
# command handlers


def _cmd_norm(cfg, seed):
    check_keys(cfg, "config", ("f", "p"),
               ("command", "seed", "alpha", "tol", "radii"))
    alpha = as_real(cfg.get("alpha", 0.0), "alpha")
    tol = as_real(cfg.get("tol", 1.0e-8), "tol")
    pspec = _spec_of(cfg["p"], "exponent", "p")
    fspec = _spec_of(cfg["f"], "function", "f")
    p = build_exponent(pspec, "p")
    phat = build_complexified(pspec) if _needs_phat(fspec) else None
    f = build_function(fspec, phat=phat, ctx="f")
    rep = Report(command="norm")
    rep.meta["alpha"] = alpha
    if alpha == -1.0:
        hn = hardy_norm(f, p, radii=_radii_of(cfg), tol=tol)
        rep.add("supNorm", hn.sup_norm)
        rep.add("limNorm", hn.lim_norm)
        for w in hn.warnings:
            rep.warn(w)
    else:
        try:
            rep.add("norm", luxemburg_norm(f, p, BergmanWeight(alpha),
                                           tol=tol))
        except NotInSpaceError as exc:
            rep.add("norm", math.inf, passed=False, note=str(exc))
    return rep


def _cmd_mean(cfg, seed):
    check_keys(cfg, "config", ("f", "p", "r"),
               ("command", "seed", "tol", "csv"))
    tol = as_real(cfg.get("tol", 1.0e-8), "tol")
    pspec = _spec_of(cfg["p"], "exponent", "p")
    fspec = _spec_of(cfg["f"], "function", "f")
    p = build_exponent(pspec, "p")
    phat = build_complexified(pspec) if _needs_phat(fspec) else None
    f = build_function(fspec, phat=phat, ctx="f")
    rvals = cfg["r"]
    rs = ([as_real(rvals, "r")] if isinstance(rvals, (int, float))
          else as_real_list(rvals, "r"))
    rep = Report(command="mean")
    pairs = []
    for r in rs:
        try:
            m = integral_mean(f, p, float(r), tol=tol)
        except NotInSpaceError as exc:
            rep.add("mean(r=%g)" % r, math.inf, passed=False, note=str(exc))
            continue
        rep.add("mean(r=%g)" % r, m)
        pairs.append((float(r), m))
    if "csv" in cfg:
        with open(str(cfg["csv"]), "w", encoding="utf-8") as fh:
            fh.write("r,mean\n")
            for r, m in pairs:
                fh.write("%.17g,%.17g\n" % (r, m))
    return rep


def _equiv_params(cfg):
    return RadialEquivParams(
        q=as_real(cfg.get("q", 2.0), "q"),
        a=as_real(cfg.get("a", 2.0), "a"),
        alpha=as_real(cfg.get("alpha", 0.0), "alpha"),
        x_grid=tuple(as_real_list(cfg["xGrid"], "xGrid"))
        if "xGrid" in cfg else (),
        lambda_grid=tuple(as_real_list(cfg["lambdaGrid"], "lambdaGrid"))
        if "lambdaGrid" in cfg else (),
    )


def _cmd_equiv(cfg, seed):
    check = str(cfg.get("check", "v"))
    base = ("command", "seed", "check")
    if check in ("v", "vi", "vii"):
        check_keys(cfg, "config", ("p",),
                   base + ("q", "a", "alpha", "xGrid", "lambdaGrid"))
        p = build_exponent(_spec_of(cfg["p"], "exponent", "p"), "p")
        fn = {"v": condition_v, "vi": condition_vi,
              "vii": condition_vii}[check]
        return fn(p, _equiv_params(cfg)).to_report()
    if check == "incmult":
        check_keys(cfg, "config", (), base + ("f", "trials", "xGrid"))
        if "f" in cfg:
            fspec = cfg["f"]
            if not isinstance(fspec, dict):
                raise SchemaError("incmult f must be {knots, values}")
            check_keys(fspec, "f", ("knots", "values"))
            fobj = StepFunction(tuple(as_real_list(fspec["knots"], "knots")),
                                tuple(as_real_list(fspec["values"],
                                                   "values")))
        else:
            fobj = random_step(np.random.default_rng(seed))
        xs = (tuple(as_real_list(cfg["xGrid"], "xGrid"))
              if "xGrid" in cfg else None)
        rep = Report(command="equiv/incmult")
        for sub in inc_mult_check(fobj, x_grid=xs,
                                  trials=as_int(cfg.get("trials", 100),
                                                "trials"), seed=seed):
            rep.extend(sub.to_report())
        return rep
    if check == "growth":
        check_keys(cfg, "config", ("f", "q", "pValue"),
                   base + ("alpha", "rGrid", "tol"))
        f = build_function(_spec_of(cfg["f"], "function", "f"), ctx="f")
        grid = (tuple(as_real_list(cfg["rGrid"], "rGrid"))
                if "rGrid" in cfg else None)
        return growth_lemma_check(f, as_real(cfg["q"], "q"),
                                  as_real(cfg["pValue"], "pValue"),
                                  alpha=as_real(cfg.get("alpha", 0.0),
                                                "alpha"),
                                  r_grid=grid,
                                  tol=as_real(cfg.get("tol", 1.0e-6), "tol"))
    if check == "kernel-estimate":
        check_keys(cfg, "config", ("r", "rho", "pValue", "q"),
                   base + ("a", "tol"))
        return kernel_mean_estimate_check(
            as_real(cfg["r"], "r"), as_real(cfg["rho"], "rho"),
            as_real(cfg["pValue"], "pValue"), as_real(cfg["q"], "q"),
            a=as_real(cfg.get("a", 2.0), "a"),
            tol=as_real(cfg.get("tol", 1.0e-6), "tol"))
    if check == "hat":
        check_keys(cfg, "config", ("f", "p"),
                   base + ("alpha", "radii", "tol"))
        pspec = _spec_of(cfg["p"], "exponent", "p")
        fspec = _spec_of(cfg["f"], "function", "f")
        p = build_exponent(pspec, "p")
        phat = build_complexified(pspec) if _needs_phat(fspec) else None
        f = build_function(fspec, phat=phat, ctx="f")
        return hat_equivalence_check(
            f, p, BergmanWeight(as_real(cfg.get("alpha", 0.0), "alpha")),
            radii=_radii_of(cfg),
            tol=as_real(cfg.get("tol", 1.0e-6), "tol"))
    if check == "separation":
        check_keys(cfg, "config", ("p", "q"), base + ("alpha",))
        p = build_exponent(_spec_of(cfg["p"], "exponent", "p"), "p")
        return separation_witness(
            p, as_real(cfg["q"], "q"),
            BergmanWeight(as_real(cfg.get("alpha", 0.0), "alpha")))
    raise SchemaError("unknown equiv check %r (v, vi, vii, incmult, growth, "
                      "kernel-estimate, hat, separation)" % check)


def _cmd_carleson(cfg, seed):
    check = str(cfg.get("check", "box"))
    base = ("command", "seed", "check", "a")
    a = as_real(cfg.get("a", 2.0), "a")
    if check == "box":
        check_keys(cfg, "config", ("mu",), base + ("hGrid", "thetaGrid"))
        mu = build_measure(_spec_of(cfg["mu"], "measure", "mu"), "mu")
        hg = (tuple(as_real_list(cfg["hGrid"], "hGrid"))
              if "hGrid" in cfg else None)
        tg = (tuple(as_real_list(cfg["thetaGrid"], "thetaGrid"))
              if "thetaGrid" in cfg else None)
        return box_condition_sup(mu, a=a, h_grid=hg,
                                 theta_grid=tg).to_report()
    if check == "embedding":
        check_keys(cfg, "config", ("mu", "p"), base + ("radii", "tol"))
        mu = build_measure(_spec_of(cfg["mu"], "measure", "mu"), "mu")
        pspec = _spec_of(cfg["p"], "exponent", "p")
        return embedding_sup(mu, build_exponent(pspec, "p"),
                             phat=build_complexified(pspec), a=a,
                             radii=_radii_of(cfg),
                             tol=as_real(cfg.get("tol", 1.0e-8), "tol"))
    if check == "escape":
        check_keys(cfg, "config", ("p",), base + ("kRange", "radii", "tol"))
        pspec = _spec_of(cfg["p"], "exponent", "p")
        ks = None
        if "kRange" in cfg:
            pair = as_real_list(cfg["kRange"], "kRange")
            if len(pair) != 2:
                raise SchemaError("kRange must be [kmin, kmax]")
            ks = tuple(range(int(pair[0]), int(pair[1]) + 1))
        return escaping_atom_ratios(build_exponent(pspec, "p"),
                                    build_complexified(pspec), a=a, ks=ks,
                                    radii=_radii_of(cfg),
                                    tol=as_real(cfg.get("tol", 1.0e-8),
                                                "tol"))
    if check == "mass":
        check_keys(cfg, "config", ("mu", "h"), base + ("theta0",))
        mu = build_measure(_spec_of(cfg["mu"], "measure", "mu"), "mu")
        sq = CarlesonSquare(as_real(cfg["h"], "h"),
                            as_real(cfg.get("theta0", 0.0), "theta0"))
        rep = Report(command="carleson/mass")
        rep.add("squareMass", square_mass(mu, sq))
        rep.add("totalMass", mu.mass)
        return rep
    raise SchemaError("unknown carleson check %r (box, embedding, escape, "
                      "mass)" % check)


def _cmd_littlewood(cfg, seed):
    check = str(cfg.get("check", "subordination"))
    base = ("command", "seed", "check", "tol")
    if check == "subordination":
        check_keys(cfg, "config", ("f", "omega", "p"), base + ("rGrid",))
        f = build_function(_spec_of(cfg["f"], "function", "f"), ctx="f")
        om = build_function(_spec_of(cfg["omega"], "function", "omega"),
                            ctx="omega")
        p = build_exponent(_spec_of(cfg["p"], "exponent", "p"), "p")
        grid = (tuple(as_real_list(cfg["rGrid"], "rGrid"))
                if "rGrid" in cfg else None)
        return littlewood_check(f, om, p, r_grid=grid,
                                tol=as_real(cfg.get("tol", 1.0e-6), "tol"))
    if check == "composition":
        check_keys(cfg, "config", ("phi", "p"), base + ("alpha", "suite"))
        phi = build_function(_spec_of(cfg["phi"], "function", "phi"),
                             ctx="phi")
        p = build_exponent(_spec_of(cfg["p"], "exponent", "p"), "p")
        suite = None
        if "suite" in cfg:
            if not isinstance(cfg["suite"], list):
                raise SchemaError("suite must be a list of function specs")
            suite = tuple(build_function(_spec_of(s, "function",
                                                  "suite[%d]" % i),
                                         ctx="suite[%d]" % i)
                          for i, s in enumerate(cfg["suite"]))
        return composition_check(
            phi, p, BergmanWeight(as_real(cfg.get("alpha", 0.0), "alpha")),
            suite=suite, tol=as_real(cfg.get("tol", 1.0e-6), "tol"))
    raise SchemaError("unknown littlewood check %r (subordination, "
                      "composition)" % check)


def _cmd_verify(cfg, seed):
    check_keys(cfg, "config", (), ("command", "seed", "suite"))
    warmup()
    return run_suite(str(cfg.get("suite", "all")), seed=seed)


def _cmd_construct(cfg, seed):
    check_keys(cfg, "config", (), ("command", "seed", "p", "f", "mu"))
    if not any(k in cfg for k in ("p", "f", "mu")):
        raise SchemaError("construct needs at least one of p, f, mu")
    rep = Report(command="construct")
    phat = None
    if "p" in cfg:
        pspec = _spec_of(cfg["p"], "exponent", "p")
        p = build_exponent(pspec, "p")
        rep.add("pMinus", p.p_minus)
        rep.add("pPlus", p.p_plus)
        rep.add("isRadial", float(p.is_radial))
        rep.add("breakpointCount", float(len(p.breakpoints_u)))
        z = np.asarray([0.0 + 0.0j, 0.9 + 0.0j, 0.9j])
        vals = np.asarray(p.value_z(z), dtype=np.float64).ravel()
        for zz, v in zip(("0", "0.9", "0.9i"), vals):
            rep.add("p(%s)" % zz, float(v))
        if "f" in cfg and _needs_phat(_spec_of(cfg["f"], "function", "f")):
            phat = build_complexified(pspec)
    if "f" in cfg:
        f = build_function(_spec_of(cfg["f"], "function", "f"), phat=phat,
                           ctx="f")
        vals = np.asarray(f(np.array([0.0 + 0.0j, 0.4 + 0.3j]))).ravel()
        rep.add("absAtZero", float(abs(vals[0])))
        rep.add("absInterior", float(abs(vals[1])))
        if f.zeros is not None:
            rep.add("zeroCount", float(len(f.zeros)))
        if f.arg_bound is not None:
            rep.add("argBound", float(f.arg_bound))
        rep.add("boundaryOk", float(bool(f.boundary_ok)))
    if "mu" in cfg:
        mu = build_measure(_spec_of(cfg["mu"], "measure", "mu"), "mu")
        rep.add("atomCount", float(len(mu)))
        rep.add("mass", mu.mass)
    return rep


_DISPATCH = {
    "norm": _cmd_norm, "mean": _cmd_mean, "equiv": _cmd_equiv,
    "carleson": _cmd_carleson, "littlewood": _cmd_littlewood,
    "verify": _cmd_verify, "construct": _cmd_construct,
}


# ---------------------------------------------------------------------------
# plumbing


def _load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise SchemaError("cannot read config %s: %s" % (path, exc))
    except ValueError as exc:
        raise SchemaError("config %s is not valid JSON: %s" % (path, exc))
    if not isinstance(cfg, dict):
        raise SchemaError("config must be a JSON object")
    return cfg


def _inputs_digest(cfg, seed):
    blob = json.dumps({"config": cfg, "seed": seed}, sort_keys=True,
                      separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cap_threads():
    cap = os.environ.get("VXS_MAX_THREADS")
    if not cap:
        return
    try:
        n = max(1, int(cap))
    except ValueError:
        return
    try:
        import numba
        numba.set_num_threads(min(n, numba.get_num_threads()))
    except Exception:
        pass


def _emit(rep, out_path):
    payload = rep.to_dict()
    payload["digest"] = rep.digest()
    text = json.dumps(payload, sort_keys=True, indent=2)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="vxs",
        description="Variable-exponent Hardy/Bergman space computations "
                    "on the unit disc.")
    parser.add_argument("command", choices=_COMMANDS)
    parser.add_argument("--config", metavar="FILE",
                        help="JSON run configuration")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the config seed (default 20240)")
    parser.add_argument("--out", metavar="FILE",
                        help="also write the JSON report here")
    parser.add_argument("--suite", choices=sorted(SUITES),
                        help="suite name for the verify command")
    args = parser.parse_args(argv)
    _cap_threads()
    try:
        cfg = _load_config(args.config) if args.config else {}
        # aliases from the long-form schema
        for alias, key in (("exponentSpec", "p"), ("functionSpec", "f"),
                           ("measureSpec", "mu")):
            if alias in cfg:
                if key in cfg:
                    raise SchemaError("both %s and %s given" % (alias, key))
                cfg[key] = cfg.pop(alias)
        if "command" in cfg and cfg["command"] != args.command:
            raise SchemaError("config command %r does not match %r"
                              % (cfg["command"], args.command))
        if args.suite:
            if args.command != "verify":
                raise SchemaError("--suite only applies to verify")
            cfg["suite"] = args.suite
        if "seed" in cfg:
            as_int(cfg["seed"], "seed")
        seed = args.seed if args.seed is not None else int(cfg.get("seed",
                                                                   20240))
        try:
            rep = _DISPATCH[args.command](cfg, seed)
        except NotInSpaceError as exc:
            rep = Report(command=args.command)
            rep.add("inSpace", 0.0, passed=False, note=str(exc))
        rep.meta.setdefault("seed", seed)
        rep.meta["inputsDigest"] = _inputs_digest(cfg, seed)
        _emit(rep, args.out)
    except (SchemaError, DomainError, NotHarmonicError, SubordinationError,
            SingularityError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (AccuracyError, EvaluationError, BracketError, BranchError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return 3
    if rep.nonconvergent:
        return 3
    if not rep.passed:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
