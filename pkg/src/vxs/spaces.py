"""Modulars, Luxemburg norms, integral means and Hardy norms.

The modular of f against exponent p over a measure mu is
int |f|^{p(z)} dmu(z); the Luxemburg norm is inf { lam > 0 :
modular(f/lam) <= 1 }.  Measures used here: weighted normalized area
measure on the disc (total mass 1, weight parameter alpha > -1), normalized
arclength on a circle of radius r (integral means), and plain dx on the
interval (-1, 1).

Strategy: quadrature nodes are chosen once per (f, p, measure) by adaptive
rules, then every bisection step over lam is a single fused kernel pass over
the stored samples sum w exp(p (log|f| - log lam)).  Boundary-refined
integrals keep per-level sums so the geometric tail estimate is redone at
each lam; divergence of those level sums does not depend on lam, which is
what makes "f is not in the space" detectable at bracket time.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .analytic import AnalyticFunction
from .errors import DomainError, EvaluationError, NotInSpaceError
from .numerics import (BergmanWeight, CircleRule, RadialRule, adaptive_circle_mean,
                       area_weight_u, bisect_monotone, cos_nodes, extrapolate_tail,
                       gauss_legendre, theta_nodes, unit_nodes)

DEFAULT_HARDY_LEVELS = 20


@dataclass
class Modular:
    """Value of int |f|^p dmu with convergence metadata."""

    value: float
    converged: bool
    diverged: bool
    tail_estimate: float
    warnings: tuple = ()


@dataclass
class HardyNorm:
    """Integral means along a radius grid increasing to 1."""

    sup_norm: float
    lim_norm: float
    radii: tuple
    means: tuple
    converged: bool
    warnings: tuple = ()


@dataclass
class _Samples:
    """Quadrature samples: weights, log|f|, p, level offsets, level groups.

    groups lists (first_level, last_level, extrapolate); levels inside an
    extrapolating group must shrink geometrically toward its end.
    """

    w: np.ndarray
    logf: np.ndarray
    p: np.ndarray
    offsets: np.ndarray
    groups: tuple

    def all_zero(self):
        return bool(np.all(np.isneginf(self.logf[self.w > 0.0])))


def scaled(f, factor):
    """f / factor as an AnalyticFunction, preserving fast-path metadata."""
    factor = float(factor)
    if factor <= 0.0:
        raise DomainError("scale factor must be positive")
    g = AnalyticFunction(lambda z: f.eval_fn(z) / factor, "(%s)/%g" % (f.label, factor),
                         zeros=f.zeros, arg_bound=f.arg_bound, arg_fn=f.arg_fn,
                         boundary_ok=f.boundary_ok, is_zero=f.is_zero)
    kp = getattr(f, "kernel_params", None)
    if kp is not None:
        g.kernel_params = (kp[0], kp[1], kp[2] - math.log(factor))
    rl = getattr(f, "radial_logabs", None)
    if rl is not None:
        g.radial_logabs = lambda r: rl(r) - math.log(factor)
    return g


# ---------------------------------------------------------------------------
# circle-level sampling


def _fast_circle(f, p_r, r, rule):
    """(log-mean handle) for |f|^s means with closed circle structure.

    Returns logf_eq such that the radius-r contribution to a modular at
    scale lam is exp(p_r (logf_eq - log lam)): a single equivalent sample.
    None when f has no fast path or it degenerates.
    """
    rl = getattr(f, "radial_logabs", None)
    if rl is not None:
        return rl(r), True
    kp = getattr(f, "kernel_params", None)
    if kp is not None:
        c0, a, log_scale = kp
        c = c0 * r
        e = -0.5 * a * p_r

        def level(n, mid):
            return kernels.abs_sq_pow_mean(cos_nodes(n, mid), c, e)

        cm = adaptive_circle_mean(level, rule)
        if cm.value <= 0.0:
            return -math.inf, cm.converged
        return log_scale + math.log(cm.value) / p_r, cm.converged
    return None


RETAIN_CAP = 8192


def _circle_arrays(f, p, r, rule, retain_cap=None):
    """Sample log|f| and p over an adaptively refined circle at radius r.

    The refinement criterion is the max-normalized modular mean (scale
    free, overflow free).  Returns (logf, pvals, converged); the union of
    all levels is the uniform grid at the final N.  With retain_cap set,
    the returned arrays are truncated to the widest layer prefix within
    the cap; a prefix of layers is itself a uniform circle grid, so equal
    weights stay a valid (coarser) quadrature and memory stays bounded
    when a singular integrand pushes refinement to the node cap.
    """
    logs = []
    ps = []
    ref = [None]
    u = 1.0 - r

    def level(n, mid):
        z = r * unit_nodes(n, mid)
        fz = f.eval_fn(z)
        if not np.all(np.isfinite(fz)):
            raise EvaluationError("non-finite function values at radius %g" % r)
        with np.errstate(divide="ignore"):
            la = np.log(np.abs(fz))
        pv = np.asarray(p.value_u_theta(u, theta_nodes(n, mid)), dtype=float)
        if not np.all(np.isfinite(pv)):
            raise EvaluationError("non-finite exponent values at radius %g" % r)
        logs.append(la)
        ps.append(pv)
        if ref[0] is None:
            peak = float(np.max(la))
            ref[0] = peak if math.isfinite(peak) else 0.0
        with np.errstate(over="ignore"):
            vals = np.exp(pv * (la - ref[0]))
        return float(np.mean(vals))

    cm = adaptive_circle_mean(level, rule)
    if retain_cap is not None and sum(a.size for a in logs) > retain_cap:
        keep = 1
        total = logs[0].size
        while keep < len(logs) and total + logs[keep].size <= retain_cap:
            total += logs[keep].size
            keep += 1
        logs = logs[:keep]
        ps = ps[:keep]
    return np.concatenate(logs), np.concatenate(ps), cm.converged


def _collapsed_circle(f, p, p_r, r, rule):
    """Exact one-sample reduction of a radius-r circle for constant p_r.

    With p constant on the circle the scale factors out of the modular, so
    the circle's contribution at scale lam is quad_w exp(p_r (logf_eq -
    log lam)) with logf_eq the log of the L^{p_r} mean.  The sample arrays
    stay local; nothing per-circle is retained.
    """
    la, _, ok = _circle_arrays(f, p, r, rule)
    m = float(np.max(la))
    if not math.isfinite(m):
        return -math.inf, ok
    with np.errstate(over="ignore"):
        mean = float(np.mean(np.exp(p_r * (la - m))))
    return m + math.log(mean) / p_r, ok


# ---------------------------------------------------------------------------
# sample builders


def _radial_rule_for(p, radial_rule):
    rule = radial_rule or RadialRule()
    if p.breakpoints_u:
        rule = rule.with_breakpoints(p.breakpoints_u)
    return rule


def _disc_samples(f, p, weight, circle_rule, radial_rule):
    """Samples for the weighted area modular, grouped by dyadic radial level."""
    circle_rule = circle_rule or CircleRule()
    rule = _radial_rule_for(p, radial_rule)
    alpha = weight.alpha
    x, wgl = gauss_legendre(rule.nodes_per_panel)
    w_list, lf_list, p_list = [], [], []
    offsets = [0]
    count = 0
    warn = set()
    fast = p.is_radial
    for j in range(rule.max_levels):
        hi = 2.0 ** (-j)
        lo = 0.5 * hi
        cuts = [b for b in rule.breakpoints_u if lo < b < hi]
        edges = [lo] + sorted(cuts) + [hi]
        for a, b in zip(edges[:-1], edges[1:]):
            half = 0.5 * (b - a)
            for xi, wi in zip(x, wgl):
                u = a + half * (xi + 1.0)
                r = 1.0 - u
                quad_w = half * wi * area_weight_u(u, alpha)
                p_r = float(np.asarray(p.value_u_theta(u, 0.0)).ravel()[0]) if fast else None
                handle = _fast_circle(f, p_r, r, circle_rule) if fast else None
                if fast and handle is None:
                    handle = _collapsed_circle(f, p, p_r, r, circle_rule)
                if handle is not None:
                    logf_eq, ok = handle
                    if not ok:
                        warn.add("no convergence in a circle mean (node cap reached)")
                    w_list.append(np.array([quad_w]))
                    lf_list.append(np.array([logf_eq]))
                    p_list.append(np.array([p_r]))
                    count += 1
                else:
                    la, pv, ok = _circle_arrays(f, p, r, circle_rule,
                                                retain_cap=RETAIN_CAP)
                    if not ok:
                        warn.add("no convergence in a circle mean (node cap reached)")
                    w_list.append(np.full(la.shape, quad_w / la.size))
                    lf_list.append(la)
                    p_list.append(pv)
                    count += la.size
        offsets.append(count)
    samples = _Samples(np.concatenate(w_list), np.concatenate(lf_list),
                       np.concatenate(p_list), np.asarray(offsets, dtype=np.int64),
                       ((0, rule.max_levels, True),))
    return samples, tuple(sorted(warn))


def _circle_samples(f, p, r, circle_rule):
    """Samples for the normalized arclength modular at one radius."""
    circle_rule = circle_rule or CircleRule()
    if p.is_radial:
        p_r = float(np.asarray(p.value_u_theta(1.0 - r, 0.0)).ravel()[0])
        handle = _fast_circle(f, p_r, r, circle_rule)
        if handle is None:
            handle = _collapsed_circle(f, p, p_r, r, circle_rule)
        logf_eq, ok = handle
        samples = _Samples(np.array([1.0]), np.array([logf_eq]), np.array([p_r]),
                           np.array([0, 1], dtype=np.int64), ((0, 1, False),))
        warn = () if ok else ("no convergence in a circle mean (node cap reached)",)
        return samples, warn
    la, pv, ok = _circle_arrays(f, p, r, circle_rule, retain_cap=RETAIN_CAP)
    samples = _Samples(np.full(la.shape, 1.0 / la.size), la, pv,
                       np.array([0, la.size], dtype=np.int64), ((0, 1, False),))
    warn = () if ok else ("no convergence in a circle mean (node cap reached)",)
    return samples, warn


def _interval_samples(f, p, radial_rule):
    """Samples for the dx modular on (-1, 1), refined toward both endpoints."""
    rule = _radial_rule_for(p, radial_rule)
    x, wgl = gauss_legendre(rule.nodes_per_panel)
    w_list, lf_list, p_list = [], [], []
    offsets = [0]
    count = 0
    for side, ang in ((1.0, 0.0), (-1.0, math.pi)):
        for j in range(rule.max_levels):
            hi = 2.0 ** (-j)
            lo = 0.5 * hi
            cuts = [b for b in rule.breakpoints_u if lo < b < hi]
            edges = [lo] + sorted(cuts) + [hi]
            la_level, pv_level, w_level = [], [], []
            for a, b in zip(edges[:-1], edges[1:]):
                half = 0.5 * (b - a)
                u = a + half * (x + 1.0)
                pts = side * (1.0 - u)
                fz = f.eval_fn(pts.astype(complex))
                if not np.all(np.isfinite(fz)):
                    raise EvaluationError("non-finite function values on the interval")
                with np.errstate(divide="ignore"):
                    la_level.append(np.log(np.abs(fz)))
                pv_level.append(np.asarray(p.value_u_theta(u, ang), dtype=float))
                w_level.append(half * wgl)
            w_list.append(np.concatenate(w_level))
            lf_list.append(np.concatenate(la_level))
            p_list.append(np.concatenate(pv_level))
            count += w_list[-1].size
            offsets.append(count)
    j = rule.max_levels
    samples = _Samples(np.concatenate(w_list), np.concatenate(lf_list),
                       np.concatenate(p_list), np.asarray(offsets, dtype=np.int64),
                       ((0, j, True), (j, 2 * j, True)))
    return samples


# ---------------------------------------------------------------------------
# modular evaluation and the Luxemburg solve


def _modular_at(samples, loglam):
    """(value, diverged, tail) of the modular at scale exp(loglam)."""
    n_levels = len(samples.offsets) - 1
    sums = np.empty(n_levels)
    kernels.power_sums(samples.w, samples.logf, samples.p, loglam,
                       samples.offsets, sums)
    if not np.all(np.isfinite(sums)):
        return math.inf, True, math.inf
    total = 0.0
    tail_total = 0.0
    for first, last, extrap in samples.groups:
        level_vals = list(sums[first:last])
        if extrap:
            tail, diverged, _ = extrapolate_tail(level_vals)
            if diverged:
                return math.inf, True, math.inf
            tail_total += tail
        total += math.fsum(reversed(level_vals))
    return total + tail_total, False, tail_total


def _luxemburg_from_samples(samples, tol):
    if samples.all_zero():
        return 0.0
    finite = samples.logf[np.isfinite(samples.logf) & (samples.w > 0.0)]
    start = float(np.median(finite)) if finite.size else 0.0

    def h(lam):
        value, diverged, _ = _modular_at(samples, math.log(lam))
        if diverged:
            raise NotInSpaceError("modular diverges at every scale; "
                                  "the function is not in the space")
        return value

    hi = math.exp(min(max(start, -300.0), 300.0))
    for _ in range(400):
        if h(hi) <= 1.0:
            break
        hi *= 4.0
    else:
        raise NotInSpaceError("modular stayed above 1 at every probed scale")
    lo = hi
    for _ in range(400):
        lo /= 4.0
        if h(lo) > 1.0:
            break
    else:
        # modular <= 1 even as lam -> 0: the norm is 0 (f vanishes a.e.)
        return 0.0
    return bisect_monotone(h, lo, hi, target=1.0, tol=tol)


# ---------------------------------------------------------------------------
# public operations


def bergman_modular(f, p, weight=None, circle_rule=None, radial_rule=None):
    """int_D |f|^{p(z)} dA_alpha as a Modular (streaming, nothing retained).

    dA_alpha is the normalized weighted area measure, alpha > -1.
    """
    weight = weight or BergmanWeight(0.0)
    if weight.is_hardy:
        raise DomainError("bergman_modular needs alpha > -1; use hardy_norm "
                          "for the boundary case")
    samples, warn = _disc_samples(f, p, weight, circle_rule, radial_rule)
    value, diverged, tail = _modular_at(samples, 0.0)
    converged = not diverged and not warn
    if not diverged and value > 0.0 and tail > 1.0e-3 * value:
        warn = warn + ("tail estimate above 1e-3 of the total",)
        converged = False
    return Modular(value, converged, diverged, tail, warn)


def luxemburg_norm(f, p, weight=None, tol=1.0e-8, circle_rule=None, radial_rule=None):
    """Luxemburg norm of f in the weighted Bergman sense (alpha > -1).

    inf { lam : int |f/lam|^{p} dA_alpha <= 1 }, located by monotone
    bisection over the retained quadrature samples.  Raises NotInSpaceError
    when the modular diverges at every scale.
    """
    weight = weight or BergmanWeight(0.0)
    if weight.is_hardy:
        raise DomainError("luxemburg_norm needs alpha > -1; use hardy_norm "
                          "for the boundary case")
    samples, _ = _disc_samples(f, p, weight, circle_rule, radial_rule)
    return _luxemburg_from_samples(samples, tol)


def integral_mean(f, p, r, tol=1.0e-8, circle_rule=None):
    """Luxemburg norm over normalized arclength on the radius-r circle."""
    if not 0.0 <= r < 1.0:
        f_ok = getattr(f, "boundary_ok", False)
        if not (r == 1.0 and f_ok):
            raise DomainError("integral mean needs 0 <= r < 1 (r = 1 only for "
                              "boundary-safe functions)")
    samples, _ = _circle_samples(f, p, r, circle_rule)
    return _luxemburg_from_samples(samples, tol)


def integral_mean_modular(f, p, r, circle_rule=None):
    """Circle mean of |f|^{p(r e^{i t})} at radius r (the modular itself)."""
    samples, warn = _circle_samples(f, p, r, circle_rule)
    value, diverged, _ = _modular_at(samples, 0.0)
    return Modular(value, not diverged and not warn, diverged, 0.0, warn)


def hardy_norm(f, p, radii=None, tol=1.0e-8, circle_rule=None):
    """sup and limit of the integral means along a dyadic radius grid.

    radii defaults to 1 - 2^{-k}, k = 1..20.  The limit norm is the last
    mean; convergence requires the last step to move it by under 1e-3
    relative.
    """
    if radii is None:
        radii = [1.0 - 2.0 ** (-k) for k in range(1, DEFAULT_HARDY_LEVELS + 1)]
    radii = [float(r) for r in radii]
    if len(radii) < 2 or any(b <= a for a, b in zip(radii, radii[1:])):
        raise DomainError("hardy_norm needs an increasing grid of at least 2 radii")
    means = [integral_mean(f, p, r, tol, circle_rule) for r in radii]
    sup_norm = max(means)
    lim_norm = means[-1]
    step = abs(means[-1] - means[-2])
    converged = step <= 1.0e-3 * max(abs(lim_norm), 1.0e-300)
    warns = () if converged else ("no convergence of the integral means "
                                  "along the radius grid",)
    return HardyNorm(sup_norm, lim_norm, tuple(radii), tuple(means), converged, warns)


def interval_norm(f, p, tol=1.0e-8, radial_rule=None):
    """Luxemburg norm of f restricted to (-1, 1) against plain dx.

    The exponent is evaluated along the real diameter (theta = 0 and pi).
    Finite for Hardy-space functions by the classical interval embedding.
    """
    samples = _interval_samples(f, p, radial_rule)
    return _luxemburg_from_samples(samples, tol)
