"""Variable exponents p(.) on the closed unit disc.

An exponent is a bounded measurable function with 0 < p_- <= p(z) <= p_+ <
infinity.  Radial profiles are stored as functions of u = 1 - r so behaviour
at the boundary is evaluated without cancellation; any jump or kink locations
are published via breakpoints_u for the quadrature rules to honor.

The two named radial constructions:

* make_limsup_exponent(q, P): p alternates between P and q on dyadic blocks
  [1-2^{-n+1}, 1-2^{-n}), taking the value P on an initial sub-block chosen
  so that each block contributes at most 2^{-n-1} to the integral of the
  comparison weight (1-r)^{-2(P-q)/q}.  The result has limsup_{r->1} p = P
  on every radius yet the tail averages of the weight stay bounded.
* make_sqrt_log_exponent(q): p = q + (q/2)(-log(1-r))^{-1/2} for
  r > 1 - 1/e (continued by its value 3q/2 below), which approaches q at the
  boundary too slowly: the same weight integrates to exp((-log(1-r))^{1/2}),
  unbounded near the boundary.
"""

import math

import numpy as np

from ._backend import kernels
from .errors import DomainError, EvaluationError, NotHarmonicError

DEFAULT_MODES = 256
_LH_SEED = 0xC0FFEE


def _as_complex_contig(z):
    return np.ascontiguousarray(np.asarray(z, dtype=np.complex128))


class VariableExponent:
    """Base class; subclasses implement value_u_theta(u, theta)."""

    kind = "abstract"

    def __init__(self, p_minus, p_plus, breakpoints_u=(), label="p"):
        if not (0.0 < p_minus <= p_plus < math.inf):
            raise DomainError("exponent range must satisfy 0 < p_- <= p_+ < inf, got [%r, %r]"
                              % (p_minus, p_plus))
        self.p_minus = float(p_minus)
        self.p_plus = float(p_plus)
        self.breakpoints_u = tuple(sorted(set(float(b) for b in breakpoints_u)))
        self.label = label

    # -- evaluation ---------------------------------------------------------

    def value_u_theta(self, u, theta):
        raise NotImplementedError

    def value_z(self, z):
        z = np.asarray(z, dtype=np.complex128)
        u = np.clip(1.0 - np.abs(z), 0.0, 1.0)
        return self.value_u_theta(u, np.angle(z))

    def boundary_value(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.value_u_theta(np.zeros_like(theta), theta)

    @property
    def is_radial(self):
        return False

    def __repr__(self):
        return "<%s %s in [%g, %g]>" % (type(self).__name__, self.label,
                                        self.p_minus, self.p_plus)


class ConstantExponent(VariableExponent):
    kind = "constant"

    def __init__(self, value):
        super().__init__(value, value, (), "p=%g" % value)
        self.value = float(value)

    def value_u_theta(self, u, theta):
        u, theta = np.broadcast_arrays(np.asarray(u, float), np.asarray(theta, float))
        return np.full(u.shape, self.value)

    @property
    def is_radial(self):
        return True


class RadialExponent(VariableExponent):
    """p depending on |z| only, via a vectorized profile in u = 1 - r."""

    kind = "radial"

    def __init__(self, profile_u, p_minus, p_plus, breakpoints_u=(), label="p(r)",
                 log_holder_constant=None):
        super().__init__(p_minus, p_plus, breakpoints_u, label)
        self.profile_u = profile_u
        self.log_holder_constant = log_holder_constant

    def value_u_theta(self, u, theta):
        u, theta = np.broadcast_arrays(np.asarray(u, float), np.asarray(theta, float))
        return np.asarray(self.profile_u(u), dtype=float)

    @property
    def is_radial(self):
        return True


class BoundaryExponent(VariableExponent):
    """p depending on arg z only (the radially-constantized exponents)."""

    kind = "boundary"

    def __init__(self, boundary_fn, p_minus=None, p_plus=None, label="p(theta)"):
        if p_minus is None or p_plus is None:
            scan = np.asarray(boundary_fn(np.linspace(0.0, 2.0 * math.pi, 4097)), float)
            if not np.all(np.isfinite(scan)):
                raise EvaluationError("boundary exponent produced non-finite values")
            p_minus = float(np.min(scan)) if p_minus is None else p_minus
            p_plus = float(np.max(scan)) if p_plus is None else p_plus
        super().__init__(p_minus, p_plus, (), label)
        self.boundary_fn = boundary_fn

    def value_u_theta(self, u, theta):
        u, theta = np.broadcast_arrays(np.asarray(u, float), np.asarray(theta, float))
        return np.asarray(self.boundary_fn(theta), dtype=float)


class HarmonicExponent(VariableExponent):
    """Harmonic p = Re P where P(z) = A_0 + sum_{n>=1} A_n z^n is analytic.

    Stored via the complex coefficients A_n (A_0 real).  Evaluation is a
    Horner pass over the trimmed coefficient list.
    """

    kind = "harmonic"

    def __init__(self, coeffs, label="p harmonic"):
        coeffs = _as_complex_contig(np.atleast_1d(coeffs))
        if abs(coeffs[0].imag) > 1.0e-12 * max(1.0, abs(coeffs[0])):
            raise DomainError("constant coefficient of a harmonic exponent must be real")
        scale = float(np.max(np.abs(coeffs)))
        keep = np.nonzero(np.abs(coeffs) > 1.0e-13 * max(1.0, scale))[0]
        coeffs = coeffs[: keep[-1] + 1] if keep.size else coeffs[:1]
        self.coeffs = coeffs
        self.modes = len(coeffs) - 1
        trace = self.boundary_trace(np.linspace(0.0, 2.0 * math.pi, 8 * (self.modes + 1) + 1))
        p_minus, p_plus = float(np.min(trace)), float(np.max(trace))
        if p_minus <= 0.0:
            raise DomainError("harmonic exponent boundary dips to %g <= 0" % p_minus)
        super().__init__(p_minus, p_plus, (), label)

    def analytic_value(self, z):
        z = _as_complex_contig(z)
        out = np.empty(z.shape, dtype=np.complex128)
        kernels.horner(self.coeffs, z.ravel(), out.ravel())
        return out

    def boundary_trace(self, theta):
        return self.analytic_value(np.exp(1j * np.asarray(theta, float))).real

    def value_u_theta(self, u, theta):
        u, theta = np.broadcast_arrays(np.asarray(u, float), np.asarray(theta, float))
        z = (1.0 - u) * np.exp(1j * theta)
        return self.analytic_value(z).real

    def value_z(self, z):
        return self.analytic_value(z).real

    @property
    def is_radial(self):
        return self.modes == 0


class ComposedExponent(VariableExponent):
    """p composed with a disc self-map: (p o omega)(z) = p(omega(z))."""

    kind = "composed"

    def __init__(self, base, omega, label=None):
        super().__init__(base.p_minus, base.p_plus, (),
                         label or ("%s o omega" % base.label))
        self.base = base
        self.omega = omega

    def value_z(self, z):
        w = np.asarray(self.omega(np.asarray(z, dtype=np.complex128)))
        mag = np.abs(w)
        if np.any(mag > 1.0 + 1.0e-12):
            raise DomainError("composed exponent evaluated outside the closed disc")
        return self.base.value_z(np.where(mag > 1.0, w / mag, w))

    def value_u_theta(self, u, theta):
        u, theta = np.broadcast_arrays(np.asarray(u, float), np.asarray(theta, float))
        return self.value_z((1.0 - u) * np.exp(1j * theta))


class ComplexifiedExponent:
    """p_hat = p + i p_tilde with p harmonic and p_tilde its conjugate.

    p_tilde is normalized by p_tilde(0) = 0.  p_tilde_sup is the sup of
    |p_tilde| over the closed disc (attained on the boundary).
    """

    def __init__(self, base):
        if not isinstance(base, HarmonicExponent):
            raise DomainError("complexified exponents require a harmonic base")
        self.base = base
        self.coeffs = base.coeffs
        tilde = base.analytic_value(np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 4096,
                                                            endpoint=False))).imag
        self.p_tilde_sup = float(np.max(np.abs(tilde))) if tilde.size else 0.0

    @property
    def p_minus(self):
        return self.base.p_minus

    @property
    def p_plus(self):
        return self.base.p_plus

    def hat_value(self, z):
        """Complex value p(z) + i p_tilde(z)."""
        return self.base.analytic_value(z)

    def p_value(self, z):
        return self.hat_value(z).real

    def p_tilde_value(self, z):
        return self.hat_value(z).imag

    def __repr__(self):
        return "<ComplexifiedExponent of %r, |p~| <= %g>" % (self.base, self.p_tilde_sup)


# ---------------------------------------------------------------------------
# constructors


def constant(value):
    return ConstantExponent(value)


def log_recip_exponent(q, c=1.0, r0=0.5):
    """p(r) = q + c/(-log(1-r)) for r >= r0, frozen at its r0 value below.

    Continuous, decreasing to q at the boundary, and radially log-Holder
    with constant exactly c on [r0, 1).
    """
    if not (q > 0.0 and c > 0.0 and 0.0 < r0 < 1.0):
        raise DomainError("log_recip_exponent needs q > 0, c > 0, 0 < r0 < 1")
    u0 = 1.0 - r0
    top = q + c / (-math.log(u0))

    def profile(u):
        u = np.asarray(u, float)
        with np.errstate(divide="ignore"):
            ell = -np.log(np.clip(u, 1.0e-320, None))
        vals = q + c / np.maximum(ell, -math.log(u0))
        return np.where(u > 0.0, vals, q)

    return RadialExponent(profile, q, top, (u0,), "q+c/(-log(1-r))",
                          log_holder_constant=c)


def linear_radial_exponent(q, c):
    """p(r) = q + c (1 - r); the smooth workhorse for small examples."""
    if not (q > 0.0 and q + min(c, 0.0) > 0.0):
        raise DomainError("linear radial exponent must stay positive")
    lo, hi = min(q, q + c), max(q, q + c)
    return RadialExponent(lambda u: q + c * np.asarray(u, float), lo, hi, (),
                          "q+c(1-r)")


def limsup_block_edges(q, P, n_blocks=200):
    """u values of the P-to-q switch radius in each dyadic block.

    Block n covers u in (2^{-n}, 2^{-n+1}]; the exponent is P on
    (u_R(n), 2^{-n+1}] and q on (2^{-n}, u_R(n)].  u_R solves the closed-form
    half-budget equation for int (1-r)^{-beta} dr = 2^{-n-1}, beta =
    2(P-q)/q, clamped to the block end.
    """
    beta = 2.0 * (P - q) / q
    edges = np.empty(n_blocks)
    for i in range(n_blocks):
        n = i + 1
        u_a = 2.0 ** (1 - n)
        u_end = 2.0 ** (-n)
        budget = 2.0 ** (-n - 1)
        if beta == 1.0:
            u_r = u_a * math.exp(-budget)
        else:
            u_r = (u_a ** (1.0 - beta) + (beta - 1.0) * budget) ** (1.0 / (1.0 - beta))
        edges[i] = max(u_r, u_end)
    return edges


class LimsupExponent(RadialExponent):
    """Radial step exponent with limsup P at the boundary; see module docstring."""

    kind = "limsup"

    def __init__(self, q, P, n_blocks=200):
        self.q = float(q)
        self.P = float(P)
        self.switch_u = limsup_block_edges(q, P, n_blocks)
        switches = tuple(float(s) for s in self.switch_u if s > 0.0)
        dyadic = tuple(2.0 ** (-n) for n in range(1, n_blocks))
        super().__init__(self._profile, q, P,
                         tuple(sorted(set(switches) | set(dyadic))),
                         "limsup(q=%g,P=%g)" % (q, P))

    def _profile(self, u):
        u = np.asarray(u, float)
        out = np.full(u.shape, self.q)
        pos = u > 0.0
        if np.any(pos):
            up = u[pos]
            n = np.floor(-np.log2(up)).astype(int) + 1
            n = np.clip(n, 1, len(self.switch_u))
            out_pos = np.where(up > self.switch_u[n - 1], self.P, self.q)
            out[pos] = out_pos
        return out


def make_limsup_exponent(q, P, n_blocks=200):
    """Step exponent equal to P on a shrinking initial piece of every dyadic
    block and q elsewhere, calibrated so the comparison-weight integral over
    block n is at most 2^{-n} + its q-part."""
    if not (1.0 <= q < P):
        raise DomainError("need 1 <= q < P, got q=%r, P=%r" % (q, P))
    return LimsupExponent(q, P, n_blocks)


def make_sqrt_log_exponent(q):
    """p = q + (q/2)(-log(1-r))^{-1/2} near the boundary, capped at 3q/2.

    Decays to q too slowly for tail averages of the comparison weight
    (1-r)^{-2(p-q)/q} = exp((-log(1-r))^{1/2}) to stay bounded.
    """
    if not q > 0.0:
        raise DomainError("need q > 0, got %r" % (q,))
    u_cap = math.exp(-1.0)

    def profile(u):
        u = np.asarray(u, float)
        ell = -np.log(np.clip(u, 1.0e-320, None))
        vals = q + 0.5 * q / np.sqrt(np.maximum(ell, 1.0))
        return np.where(u > 0.0, vals, q)

    return RadialExponent(profile, q, 1.5 * q, (u_cap,), "sqrtlog(q=%g)" % q)


def boundary_exponent(fn, label="p(theta)"):
    return BoundaryExponent(fn, label=label)


# ---------------------------------------------------------------------------
# harmonic extension and conjugation


def harmonic_extend(boundary_fn, modes=DEFAULT_MODES):
    """Harmonic extension of a periodic boundary function into the disc.

    The boundary is sampled at 2*modes+1 equispaced angles; the Fourier
    coefficients up to degree `modes` define the analytic completion
    P(z) = c_0 + 2 sum_{n>=1} c_n z^n, whose real part extends the sampled
    trace (exactly, for trigonometric polynomials of degree <= modes).
    """
    if modes < 1:
        raise DomainError("modes must be >= 1")
    n_s = 2 * modes + 1
    theta = (2.0 * math.pi / n_s) * np.arange(n_s)
    vals = np.asarray(boundary_fn(theta), dtype=float)
    if vals.shape != theta.shape or not np.all(np.isfinite(vals)):
        raise EvaluationError("boundary function must return finite values per angle")
    c = np.fft.fft(vals) / n_s
    coeffs = np.empty(modes + 1, dtype=np.complex128)
    coeffs[0] = c[0].real
    coeffs[1:] = 2.0 * c[1:modes + 1]
    return HarmonicExponent(coeffs)


def conjugate(p):
    """Complexify a harmonic exponent: returns p + i p_tilde, p_tilde(0) = 0.

    Constant and harmonic-extended exponents convert directly.  Any other
    kind is re-extended from its boundary trace and verified against the
    original on an interior grid; disagreement raises NotHarmonicError.
    """
    if isinstance(p, ComplexifiedExponent):
        return p
    if isinstance(p, ConstantExponent):
        return ComplexifiedExponent(HarmonicExponent(np.array([p.value + 0.0j])))
    if isinstance(p, HarmonicExponent):
        return ComplexifiedExponent(p)
    h = harmonic_extend(p.boundary_value, modes=128)
    theta = np.linspace(0.0, 2.0 * math.pi, 128, endpoint=False)
    worst = 0.0
    for u in (0.8, 0.5, 0.2):
        diff = p.value_u_theta(u, theta) - h.value_u_theta(u, theta)
        worst = max(worst, float(np.max(np.abs(diff))))
    if worst > 1.0e-7 * max(1.0, p.p_plus):
        raise NotHarmonicError("exponent differs from the extension of its boundary trace "
                               "by %g; cannot conjugate" % worst)
    return ComplexifiedExponent(h)


def constantize_radially(p):
    """Replace p by its boundary trace on every radius: p_hat(r e^{it}) = p(e^{it}).

    Idempotent; radial exponents collapse to the constant boundary limit.
    """
    if isinstance(p, (BoundaryExponent, ConstantExponent)):
        return p
    if isinstance(p, RadialExponent):
        return ConstantExponent(float(np.asarray(p.profile_u(np.array([0.0])))[0]))
    return BoundaryExponent(p.boundary_value, p.p_minus, p.p_plus,
                            label="hat(%s)" % p.label)


# ---------------------------------------------------------------------------
# log-Holder estimators


def log_holder_estimate(p, sample_count=20000):
    """sup over sampled pairs |z - w| <= 1/2 of |p(z) - p(w)| (-log|z - w|).

    Deterministic (fixed internal seed) and monotone nondecreasing in
    sample_count: the accepted-pair stream is a fixed sequence and the first
    sample_count entries are used.
    """
    if sample_count < 1:
        raise DomainError("sample_count must be positive")
    rng = np.random.default_rng(_LH_SEED)
    remaining = sample_count
    sup = 0.0
    while remaining > 0:
        m = 4096
        rad = np.sqrt(rng.random(m))
        ang = 2.0 * math.pi * rng.random(m)
        z = rad * np.exp(1j * ang)
        drad = 0.5 * np.sqrt(rng.random(m))
        dang = 2.0 * math.pi * rng.random(m)
        w = z + drad * np.exp(1j * dang)
        ok = np.abs(w) <= 1.0
        z, w = z[ok], w[ok]
        if z.size == 0:
            continue
        take = min(remaining, z.size)
        z, w = z[:take], w[:take]
        dist = np.abs(z - w)
        good = dist > 0.0
        z, w, dist = z[good], w[good], dist[good]
        vals = np.abs(p.value_z(z) - p.value_z(w)) * (-np.log(dist))
        if vals.size and not np.all(np.isfinite(vals)):
            raise EvaluationError("exponent produced non-finite values during sampling")
        if vals.size:
            sup = max(sup, float(np.max(vals)))
        remaining -= take
    return sup


def radial_log_holder_estimate(p, inner_radius=0.0, sample_count=100000):
    """sup over r >= inner_radius, theta of |p(r e^{it}) - p(e^{it})| (-log(1-r)).

    Finite exactly when p approaches its own boundary trace at a
    1/log(1/(1-r)) rate, uniformly over angles.  Evaluated on a geometric
    u-grid from 1-inner_radius down to 2^{-45}, augmented with the
    exponent's published jump locations.
    """
    if not 0.0 <= inner_radius < 1.0:
        raise DomainError("inner_radius must lie in [0, 1), got %r" % (inner_radius,))
    u_hi = 1.0 - inner_radius
    n_theta = 1 if p.is_radial else 64
    n_r = max(16, sample_count // n_theta)
    u_lo = 2.0 ** (-45)
    grid = np.geomspace(u_hi, u_lo, n_r)
    extra = [b for b in p.breakpoints_u if u_lo < b <= u_hi]
    # approach each jump from both sides
    eps_side = 1.0 - 1.0e-9
    extra += [b * eps_side for b in extra] + [min(b / eps_side, u_hi) for b in extra]
    if extra:
        grid = np.concatenate([grid, np.asarray(extra)])
    grid = grid[grid < 1.0]
    theta = np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)
    boundary = p.value_u_theta(np.zeros_like(theta), theta)
    sup = 0.0
    for u in grid:
        diff = np.abs(p.value_u_theta(np.full_like(theta, u), theta) - boundary)
        val = float(np.max(diff)) * (-math.log(u))
        if not math.isfinite(val):
            raise EvaluationError("non-finite radial comparison at u=%g" % u)
        sup = max(sup, val)
    return sup
