"""JSON specifications for exponents, functions, and measures.

Every CLI config is strict: unknown keys and malformed values raise
SchemaError so that typos surface as exit status 2 instead of silently
selecting defaults.  Complex scalars are written either as a number
(real) or as a two-element list [re, im].
"""

import numbers

from . import analytic, exponent
from .carleson import DiscMeasure
from .errors import SchemaError


def check_keys(obj, ctx, required, optional=()):
    if not isinstance(obj, dict):
        raise SchemaError("%s: expected an object, got %r" % (ctx, type(obj).__name__))
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaError("%s: missing required key(s) %s" % (ctx, ", ".join(missing)))
    allowed = set(required) | set(optional)
    unknown = [k for k in obj if k not in allowed]
    if unknown:
        raise SchemaError("%s: unknown key(s) %s (allowed: %s)"
                          % (ctx, ", ".join(sorted(unknown)), ", ".join(sorted(allowed))))


def as_real(v, ctx):
    if isinstance(v, bool) or not isinstance(v, numbers.Real):
        raise SchemaError("%s: expected a real number, got %r" % (ctx, v))
    return float(v)


def as_int(v, ctx):
    if isinstance(v, bool) or not isinstance(v, numbers.Integral):
        raise SchemaError("%s: expected an integer, got %r" % (ctx, v))
    return int(v)


def as_complex(v, ctx):
    if isinstance(v, bool):
        raise SchemaError("%s: expected a complex scalar, got %r" % (ctx, v))
    if isinstance(v, numbers.Real):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(as_real(v[0], ctx + "[0]"), as_real(v[1], ctx + "[1]"))
    raise SchemaError("%s: expected a number or [re, im], got %r" % (ctx, v))


def as_real_list(v, ctx):
    if not isinstance(v, (list, tuple)) or not v:
        raise SchemaError("%s: expected a nonempty list of numbers" % ctx)
    return [as_real(x, "%s[%d]" % (ctx, i)) for i, x in enumerate(v)]


def as_complex_list(v, ctx):
    if not isinstance(v, (list, tuple)):
        raise SchemaError("%s: expected a list" % ctx)
    return [as_complex(x, "%s[%d]" % (ctx, i)) for i, x in enumerate(v)]


# ---------------------------------------------------------------------------
# exponents


def build_exponent(spec, ctx="exponent"):
    """Construct a VariableExponent from its JSON form.

    kinds: constant, logrecip, linear, limsup, sqrtlog, fourier, boundary.
    """
    check_keys(spec, ctx, ("kind",), _EXPONENT_KEYS)
    kind = spec["kind"]
    if kind == "constant":
        check_keys(spec, ctx, ("kind", "value"))
        return exponent.constant(as_real(spec["value"], ctx + ".value"))
    if kind == "logrecip":
        check_keys(spec, ctx, ("kind", "q"), ("c", "r0"))
        return exponent.log_recip_exponent(
            as_real(spec["q"], ctx + ".q"),
            as_real(spec.get("c", 1.0), ctx + ".c"),
            as_real(spec.get("r0", 0.5), ctx + ".r0"))
    if kind == "linear":
        check_keys(spec, ctx, ("kind", "q", "c"))
        return exponent.linear_radial_exponent(as_real(spec["q"], ctx + ".q"),
                                               as_real(spec["c"], ctx + ".c"))
    if kind == "limsup":
        check_keys(spec, ctx, ("kind", "q", "P"), ("blocks",))
        return exponent.make_limsup_exponent(
            as_real(spec["q"], ctx + ".q"), as_real(spec["P"], ctx + ".P"),
            as_int(spec.get("blocks", 200), ctx + ".blocks"))
    if kind == "sqrtlog":
        check_keys(spec, ctx, ("kind", "q"))
        return exponent.make_sqrt_log_exponent(as_real(spec["q"], ctx + ".q"))
    if kind == "fourier":
        check_keys(spec, ctx, ("kind", "coefficients"))
        coeffs = as_complex_list(spec["coefficients"], ctx + ".coefficients")
        if not coeffs:
            raise SchemaError(ctx + ".coefficients: need at least the constant term")
        import numpy as np
        return exponent.HarmonicExponent(np.asarray(coeffs))
    if kind == "boundary":
        check_keys(spec, ctx, ("kind", "of"))
        return exponent.constantize_radially(build_exponent(spec["of"], ctx + ".of"))
    raise SchemaError("%s.kind: unknown exponent kind %r" % (ctx, kind))


_EXPONENT_KEYS = ("kind", "value", "q", "c", "r0", "P", "blocks",
                  "coefficients", "of")


def build_complexified(spec, ctx="exponent"):
    """Exponent spec -> p + i p_tilde (the conjugation route)."""
    return exponent.conjugate(build_exponent(spec, ctx))


# ---------------------------------------------------------------------------
# functions


def build_function(spec, phat=None, ctx="function"):
    """Construct an AnalyticFunction from its JSON form.

    types: constant, monomial, polynomial, rational, kernel, blaschke,
    mobius, power1mz, product, testfn (needs an exponent in context),
    composition (inner map must fix 0).
    """
    check_keys(spec, ctx, ("type",), _FUNCTION_KEYS)
    typ = spec["type"]
    if typ == "constant":
        check_keys(spec, ctx, ("type", "value"))
        return analytic.constant_fn(as_complex(spec["value"], ctx + ".value"))
    if typ == "monomial":
        check_keys(spec, ctx, ("type", "degree"), ("coefficient",))
        return analytic.monomial(as_int(spec["degree"], ctx + ".degree"),
                                 as_complex(spec.get("coefficient", 1.0),
                                            ctx + ".coefficient"))
    if typ == "polynomial":
        check_keys(spec, ctx, ("type", "coefficients"), ("zeros",))
        zeros = None
        if "zeros" in spec:
            zeros = as_complex_list(spec["zeros"], ctx + ".zeros")
        return analytic.polynomial(as_complex_list(spec["coefficients"],
                                                   ctx + ".coefficients"),
                                   zeros=zeros)
    if typ == "rational":
        check_keys(spec, ctx, ("type", "numerator", "denominator"), ("zeros",))
        zeros = None
        if "zeros" in spec:
            zeros = as_complex_list(spec["zeros"], ctx + ".zeros")
        return analytic.rational(
            as_complex_list(spec["numerator"], ctx + ".numerator"),
            as_complex_list(spec["denominator"], ctx + ".denominator"),
            zeros=zeros)
    if typ == "kernel":
        check_keys(spec, ctx, ("type", "lambda", "a", "q"))
        return analytic.kernel(as_complex(spec["lambda"], ctx + ".lambda"),
                               as_real(spec["a"], ctx + ".a"),
                               as_real(spec["q"], ctx + ".q"))
    if typ == "blaschke":
        check_keys(spec, ctx, ("type", "zeros"))
        return analytic.blaschke(as_complex_list(spec["zeros"], ctx + ".zeros"))
    if typ == "mobius":
        check_keys(spec, ctx, ("type", "lambda"))
        return analytic.mobius(as_complex(spec["lambda"], ctx + ".lambda"))
    if typ == "power1mz":
        check_keys(spec, ctx, ("type", "exponent"))
        return analytic.power_one_minus_z(as_real(spec["exponent"],
                                                  ctx + ".exponent"))
    if typ == "product":
        check_keys(spec, ctx, ("type", "factors"))
        factors = spec["factors"]
        if not isinstance(factors, list) or not factors:
            raise SchemaError(ctx + ".factors: expected a nonempty list")
        return analytic.product([build_function(f, phat, "%s.factors[%d]" % (ctx, i))
                                 for i, f in enumerate(factors)])
    if typ == "testfn":
        check_keys(spec, ctx, ("type", "z0"))
        if phat is None:
            raise SchemaError(ctx + ": testfn needs an exponent in the config")
        return analytic.carleson_test_function(as_complex(spec["z0"], ctx + ".z0"),
                                               phat)
    if typ == "composition":
        check_keys(spec, ctx, ("type", "outer", "inner"))
        outer = build_function(spec["outer"], phat, ctx + ".outer")
        inner = build_function(spec["inner"], phat, ctx + ".inner")
        return analytic.subordinate(outer, inner)
    raise SchemaError("%s.type: unknown function type %r" % (ctx, typ))


_FUNCTION_KEYS = ("type", "value", "degree", "coefficient", "coefficients",
                  "zeros", "numerator", "denominator", "lambda", "a", "q",
                  "exponent", "factors", "z0", "outer", "inner")


# ---------------------------------------------------------------------------
# measures


def build_measure(spec, ctx="measure"):
    """Construct a DiscMeasure from its JSON form.

    types: atoms ([[re, im, weight], ...]), atom (radius/theta/weight),
    area (stratified equal-area discretization), csv (path to re,im,weight
    rows).
    """
    check_keys(spec, ctx, ("type",), _MEASURE_KEYS)
    typ = spec["type"]
    if typ == "atoms":
        check_keys(spec, ctx, ("type", "atoms"))
        rows = spec["atoms"]
        if not isinstance(rows, list) or not rows:
            raise SchemaError(ctx + ".atoms: expected a nonempty list")
        pairs = []
        for i, row in enumerate(rows):
            rctx = "%s.atoms[%d]" % (ctx, i)
            if not isinstance(row, (list, tuple)) or len(row) != 3:
                raise SchemaError(rctx + ": expected [re, im, weight]")
            pairs.append((complex(as_real(row[0], rctx), as_real(row[1], rctx)),
                          as_real(row[2], rctx)))
        return DiscMeasure.from_pairs(pairs)
    if typ == "atom":
        check_keys(spec, ctx, ("type", "radius"), ("theta", "weight"))
        import cmath
        z = as_real(spec["radius"], ctx + ".radius") * \
            cmath.exp(1j * as_real(spec.get("theta", 0.0), ctx + ".theta"))
        return DiscMeasure.single_atom(z, as_real(spec.get("weight", 1.0),
                                                  ctx + ".weight"))
    if typ == "area":
        check_keys(spec, ctx, ("type",), ("radial", "angular"))
        return DiscMeasure.area(as_int(spec.get("radial", 100), ctx + ".radial"),
                                as_int(spec.get("angular", 100), ctx + ".angular"))
    if typ == "csv":
        check_keys(spec, ctx, ("type", "path"))
        if not isinstance(spec["path"], str):
            raise SchemaError(ctx + ".path: expected a string")
        return DiscMeasure.from_csv(spec["path"])
    raise SchemaError("%s.type: unknown measure type %r" % (ctx, typ))


_MEASURE_KEYS = ("type", "atoms", "radius", "theta", "weight", "radial",
                 "angular", "path")
