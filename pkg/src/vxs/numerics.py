"""Quadrature and scalar utilities for disc integrals.

Conventions used throughout the package:

* The circle mean of f at radius r is (1/2pi) int_0^{2pi} f(r e^{i t}) dt,
  computed with the trapezoid rule on equispaced nodes and N-doubling that
  reuses previous evaluations (midpoint refinement).  Spectrally accurate
  for integrands smooth on the circle.
* Radial integrals run in the variable u = 1 - r so behaviour at the
  boundary r -> 1 maps to u -> 0, where dyadic panels [u 2^{-j-1}, u 2^{-j}]
  with fixed Gauss-Legendre nodes resolve power-law and log-type weights.
  The leftover mass below the last panel is estimated by geometric
  extrapolation of the per-level sums; level ratios >= 1 flag divergence.
* The normalized area measure gives the disc total mass 1; the weighted
  measure with parameter alpha > -1 is (alpha+1)(1-|z|^2)^alpha times it
  and also has total mass 1.  alpha = -1 is a sentinel for the boundary
  (Hardy) case and is rejected by area integrators.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketError, DomainError, EvaluationError

TWO_PI = 2.0 * math.pi

# ---------------------------------------------------------------------------
# rules and results


@dataclass(frozen=True)
class CircleRule:
    """Adaptive trapezoid settings for circle means."""

    n_start: int = 64
    n_max: int = 1 << 21
    rtol: float = 1.0e-9


@dataclass(frozen=True)
class RadialRule:
    """Dyadic-panel Gauss-Legendre settings for integrals in u = 1 - r.

    breakpoints_u lists additional u values where the integrand may jump or
    kink; panels are split there so Gauss-Legendre stays accurate.
    """

    max_levels: int = 40
    nodes_per_panel: int = 16
    breakpoints_u: tuple = ()

    def with_breakpoints(self, extra):
        pts = tuple(sorted(set(self.breakpoints_u) | set(float(b) for b in extra)))
        return RadialRule(self.max_levels, self.nodes_per_panel, pts)


@dataclass(frozen=True)
class BergmanWeight:
    """Weight parameter for the area measure; alpha = -1 marks the Hardy case."""

    alpha: float = 0.0

    def __post_init__(self):
        if self.alpha < -1.0:
            raise DomainError("weight parameter must satisfy alpha >= -1, got %r" % (self.alpha,))

    @property
    def is_hardy(self):
        return self.alpha == -1.0


@dataclass
class CircleMean:
    value: float
    n_nodes: int
    converged: bool
    err_estimate: float


@dataclass
class RadialIntegral:
    value: float
    panel_value: float
    tail_estimate: float
    diverged: bool
    converged: bool
    warnings: tuple = ()


# ---------------------------------------------------------------------------
# node caches

_UNIT_CACHE = {}
_COS_CACHE = {}
_CACHE_N_LIMIT = 1 << 18


def theta_nodes(n, mid=False):
    """Equispaced angles; mid=True gives the midpoints of the n-node grid."""
    off = 0.5 if mid else 0.0
    return (TWO_PI / n) * (np.arange(n) + off)


def unit_nodes(n, mid=False):
    """exp(i theta) on the (possibly midpoint) n-grid, cached for small n."""
    key = (n, mid)
    z = _UNIT_CACHE.get(key)
    if z is None:
        z = np.exp(1j * theta_nodes(n, mid))
        if n <= _CACHE_N_LIMIT:
            _UNIT_CACHE[key] = z
    return z


def cos_nodes(n, mid=False):
    key = (n, mid)
    c = _COS_CACHE.get(key)
    if c is None:
        c = np.cos(theta_nodes(n, mid))
        if n <= _CACHE_N_LIMIT:
            _COS_CACHE[key] = c
    return c


_GL_CACHE = {}


def gauss_legendre(n):
    xw = _GL_CACHE.get(n)
    if xw is None:
        xw = np.polynomial.legendre.leggauss(n)
        _GL_CACHE[n] = xw
    return xw


# ---------------------------------------------------------------------------
# circle means


def adaptive_circle_mean(level_mean, rule=None):
    """Drive trapezoid N-doubling given level_mean(n, mid) -> mean over nodes.

    level_mean is called once on the base grid and then only on midpoint
    grids, so each node is evaluated exactly once.  Returns CircleMean.
    """
    rule = rule or CircleRule()
    n = rule.n_start
    t = level_mean(n, False)
    err = math.inf
    while n < rule.n_max:
        m = level_mean(n, True)
        t_new = 0.5 * (t + m)
        err = abs(t_new - t)
        t = t_new
        n *= 2
        if err <= rule.rtol * max(abs(t), 1.0e-300):
            return CircleMean(t, n, True, err)
    return CircleMean(t, n, False, err)


def circle_mean(f, r, rule=None):
    """Adaptive circle mean of f at radius r.

    f maps a complex ndarray to values; the mean of the real part is
    returned (a warning-free imaginary residual is required).
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError("radius must lie in [0, 1], got %r" % (r,))

    def level(n, mid):
        vals = np.asarray(f(r * unit_nodes(n, mid)))
        if not np.all(np.isfinite(vals)):
            raise EvaluationError("non-finite values in circle mean at r=%r" % (r,))
        if np.iscomplexobj(vals):
            vals = vals.real
        return float(np.mean(vals))

    return adaptive_circle_mean(level, rule)


# ---------------------------------------------------------------------------
# radial integrals in u = 1 - r


def _level_panels(hi, lo, breakpoints):
    """Sub-intervals of [lo, hi] split at the interior breakpoints."""
    cuts = [b for b in breakpoints if lo < b < hi]
    edges = [lo] + sorted(cuts) + [hi]
    return list(zip(edges[:-1], edges[1:]))


def extrapolate_tail(levels, rel_floor=1.0e-16):
    """Geometric tail estimate from per-level integrals (coarse to fine).

    Returns (tail, diverged, converged).  Exact for power-law decay; level
    ratios >= 1 (within slack) mean the series cannot converge.
    """
    if len(levels) < 3:
        return 0.0, False, True
    total = sum(abs(v) for v in levels)
    a, b, c = abs(levels[-3]), abs(levels[-2]), abs(levels[-1])
    if c <= max(1.0e-300, rel_floor * total):
        return 0.0, False, True
    q1 = c / b if b > 0 else math.inf
    q2 = b / a if a > 0 else math.inf
    q = max(q1, q2)
    if q >= 0.999:
        return math.inf, True, False
    tail = levels[-1] * q / (1.0 - q)
    return tail, False, q < 0.98


def integrate_u(g_u, u_hi, rule=None):
    """Integral of g over (0, u_hi] with dyadic refinement toward 0.

    g_u maps a u ndarray to values.  Panels are [u_hi 2^{-j-1}, u_hi 2^{-j}]
    split at rule.breakpoints_u; the mass below the finest level is added by
    geometric extrapolation.
    """
    rule = rule or RadialRule()
    if not u_hi > 0.0:
        raise DomainError("u_hi must be positive, got %r" % (u_hi,))
    x, w = gauss_legendre(rule.nodes_per_panel)
    levels = []
    warnings = []
    for j in range(rule.max_levels):
        hi = u_hi * 2.0 ** (-j)
        lo = 0.5 * hi
        s = 0.0
        for a, b in _level_panels(hi, lo, rule.breakpoints_u):
            half = 0.5 * (b - a)
            nodes = a + half * (x + 1.0)
            vals = np.asarray(g_u(nodes), dtype=float)
            if not np.all(np.isfinite(vals)):
                raise EvaluationError("non-finite integrand on panel (%g, %g)" % (a, b))
            s += half * float(np.dot(w, vals))
        levels.append(s)
    tail, diverged, tail_ok = extrapolate_tail(levels)
    if diverged:
        return RadialIntegral(math.inf, math.fsum(levels), math.inf, True, False,
                              ("diverged: level ratio >= 1",))
    if not tail_ok:
        warnings.append("slow tail decay, extrapolation may be coarse")
    panel = math.fsum(reversed(levels))
    return RadialIntegral(panel + tail, panel, tail, False, True, tuple(warnings))


def radial_integral(g, rule=None, include_jacobian_r=False):
    """Integral of g(r) (optionally g(r) r) over r in [0, 1), boundary-refined."""

    def g_u(u):
        r = 1.0 - u
        vals = np.asarray(g(r), dtype=float)
        if include_jacobian_r:
            vals = vals * r
        return vals

    return integrate_u(g_u, 1.0, rule)


def area_weight_u(u, alpha):
    """Density of the weighted normalized area measure against du dtheta/(2 pi).

    With r = 1 - u: (alpha+1)(1-r^2)^alpha 2 r = (alpha+1)(u(2-u))^alpha 2(1-u).
    """
    return (alpha + 1.0) * (u * (2.0 - u)) ** alpha * 2.0 * (1.0 - u)


def disc_integral(F, weight=None, circle_rule=None, radial_rule=None):
    """Weighted area integral of F over the disc (normalized total mass 1).

    F maps complex ndarrays to values; weight is a BergmanWeight with
    alpha > -1.  Circle means run adaptively at each radial node; radial
    panels refine dyadically toward the boundary with tail extrapolation.
    """
    weight = weight or BergmanWeight(0.0)
    if weight.is_hardy:
        raise DomainError("area integral needs alpha > -1 (alpha = -1 is the boundary case)")
    alpha = weight.alpha
    circle_rule = circle_rule or CircleRule()
    radial_rule = radial_rule or RadialRule()
    cap_hit = [False]

    def g_u(u_nodes):
        out = np.empty_like(u_nodes)
        for i, u in enumerate(u_nodes):
            cm = circle_mean(F, 1.0 - u, circle_rule)
            if not cm.converged:
                cap_hit[0] = True
            out[i] = cm.value * area_weight_u(u, alpha)
        return out

    res = integrate_u(g_u, 1.0, radial_rule)
    warns = res.warnings
    if cap_hit[0]:
        warns = warns + ("no convergence in a circle mean (node cap reached)",)
    return RadialIntegral(res.value, res.panel_value, res.tail_estimate,
                          res.diverged, res.converged and not cap_hit[0], warns)


# ---------------------------------------------------------------------------
# scalar special functions

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(TWO_PI)


def log_gamma(x):
    """log Gamma(x) for x > 0 via a 9-term Lanczos sum (g = 7)."""
    if not x > 0.0:
        raise DomainError("log_gamma needs x > 0, got %r" % (x,))
    if x < 0.5:
        # reflection keeps the sum in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    s = _LANCZOS_COEFFS[0]
    for k in range(1, len(_LANCZOS_COEFFS)):
        s += _LANCZOS_COEFFS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(s)


def circle_pole_mean_bounds(r, s):
    """Two-sided bounds for the circle mean of |1 - r e^{i t}|^{-s}, s > 1.

    Returns (lower, upper) = ((1-r^2)^{1-s}, G (1-r^2)^{1-s}) with
    G = Gamma(s-1)/Gamma(s/2)^2.  The mean itself sits between them for all
    0 <= r < 1 and meets the upper bound as r -> 1 (exactly at s = 2).
    """
    if not s > 1.0:
        raise DomainError("bounds require s > 1, got %r" % (s,))
    if not 0.0 <= r < 1.0:
        raise DomainError("bounds require 0 <= r < 1, got %r" % (r,))
    base = (1.0 - r * r) ** (1.0 - s)
    g = math.exp(log_gamma(s - 1.0) - 2.0 * log_gamma(0.5 * s))
    return base, g * base


# ---------------------------------------------------------------------------
# monotone root finding


def bisect_monotone(h, lo, hi, target=1.0, tol=1.0e-10, max_iter=200):
    """Solve h(x) = target for nonincreasing h on [lo, hi].

    Requires h(lo) >= target >= h(hi) (BracketError otherwise).  Stops when
    |h(x) - target| <= tol or the bracket width falls below tol * x.  A
    guarded secant step alternates with bisection, so convergence is at
    worst twice bisection and in practice a handful of evaluations.
    """
    if not lo < hi:
        raise DomainError("need lo < hi, got (%r, %r)" % (lo, hi))
    a, b = float(lo), float(hi)
    fa, fb = h(a) - target, h(b) - target
    if fa < 0.0 or fb > 0.0:
        raise BracketError("target %r not bracketed: h(lo)-t=%r, h(hi)-t=%r" % (target, fa, fb))
    if abs(fa) <= tol:
        return a
    if abs(fb) <= tol:
        return b
    use_secant = True
    for _ in range(max_iter):
        width = b - a
        mid = 0.5 * (a + b)
        if width <= tol * max(abs(mid), tol):
            return mid
        m = mid
        if use_secant and fa != fb and math.isfinite(fa) and math.isfinite(fb):
            m_sec = a + fa * width / (fa - fb)
            inset = 0.05 * width
            if a + inset <= m_sec <= b - inset:
                m = m_sec
        use_secant = not use_secant
        fm = h(m) - target
        if abs(fm) <= tol:
            return m
        if fm > 0.0:
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)
