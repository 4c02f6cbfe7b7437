"""Analytic functions on the disc and the constructions built from them.

An AnalyticFunction wraps a vectorized evaluator plus the metadata the rest
of the package needs: a complete zero list (when known), a certified bound
on |arg f| (when one exists), an optional continuous-argument evaluator for
branch-tracked powers, and whether the function can be sampled on |z| = 1.

The decomposition pipeline: divide out the listed zeros by a Blaschke
product, take an n-th root of the zero-free factor by argument continuation
(n the least integer with n p_- >= 2), split the root's boundary real part
into nonnegative halves and complete both analytically, then expand
(f1 - f2)^n binomially.  Each resulting part has argument bounded by
n(pi/2 + eps) (plus pi on the sign-carrying odd terms), and the parts sum
back to the original function against the Blaschke factor.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import (AccuracyError, BranchError, DomainError, SingularityError,
                     SubordinationError)
from .numerics import unit_nodes

ARG_PAD = 1.0e-3


def _as_z(z):
    return np.ascontiguousarray(np.asarray(z, dtype=np.complex128))


class AnalyticFunction:
    """Vectorized analytic function with zero/argument metadata.

    eval_fn maps a complex ndarray to a complex ndarray of the same shape.
    zeros is a tuple listing every zero in the open disc with multiplicity
    (None = unknown).  arg_bound certifies sup |arg f| when finite; arg_fn,
    when present, returns a continuous argument (needed once |arg f| may
    exceed pi).  boundary_ok says |z| = 1 is safe to evaluate.
    """

    def __init__(self, eval_fn, label="f", zeros=None, arg_bound=None,
                 arg_fn=None, boundary_ok=True, is_zero=False):
        self.eval_fn = eval_fn
        self.label = label
        self.zeros = None if zeros is None else tuple(complex(a) for a in zeros)
        self.arg_bound = arg_bound
        self.arg_fn = arg_fn
        self.boundary_ok = boundary_ok
        self.is_zero = is_zero

    def __call__(self, z):
        z = _as_z(z)
        if z.ndim == 0:
            return complex(self.eval_fn(z.reshape(1))[0])
        return self.eval_fn(z)

    def __repr__(self):
        return "<AnalyticFunction %s>" % self.label


@dataclass
class Decomposition:
    """Output of bounded_arg_decompose: f = blaschke * sum(parts)."""

    blaschke: AnalyticFunction
    parts: tuple
    pieces: tuple
    n: int
    root: AnalyticFunction
    zero_free: AnalyticFunction
    residual: float


# ---------------------------------------------------------------------------
# constructors


def constant_fn(value):
    value = complex(value)
    if value == 0:
        return AnalyticFunction(lambda z: np.zeros(z.shape, complex), "0",
                                zeros=(), is_zero=True)
    bound = abs(float(np.angle(value)))
    f = AnalyticFunction(lambda z: np.full(z.shape, value), "c=%s" % value,
                         zeros=(), arg_bound=bound)
    f.radial_logabs = lambda r: math.log(abs(value))
    return f


def monomial(degree, coefficient=1.0):
    if degree < 0:
        raise DomainError("monomial degree must be >= 0")
    c = complex(coefficient)
    if c == 0:
        return constant_fn(0.0)
    f = AnalyticFunction(lambda z: c * z ** degree, "z^%d" % degree,
                         zeros=(0.0,) * degree)
    f.radial_logabs = lambda r: (math.log(abs(c)) + degree * math.log(r) if r > 0
                                 else (math.log(abs(c)) if degree == 0 else -math.inf))
    return f


def polynomial(coeffs, zeros=None, label=None):
    """Polynomial sum coeffs[k] z^k (ascending).  zeros, if given, must be
    the complete list of zeros inside the open disc."""
    coeffs = _as_z(np.atleast_1d(coeffs))
    nz = np.nonzero(np.abs(coeffs) > 0.0)[0]
    if nz.size == 0:
        return constant_fn(0.0)
    coeffs = coeffs[: nz[-1] + 1]

    def ev(z):
        out = np.empty(z.shape, dtype=np.complex128)
        kernels.horner(coeffs, z.ravel(), out.ravel())
        return out

    f = AnalyticFunction(ev, label or "poly deg %d" % (len(coeffs) - 1), zeros=zeros)
    f.coeffs = coeffs
    return f


def rational(num_coeffs, den_coeffs, zeros=None, label="rational"):
    """Quotient of polynomials; the denominator must not vanish on the closed disc."""
    num = _as_z(np.atleast_1d(num_coeffs))
    den = _as_z(np.atleast_1d(den_coeffs))

    def ev(z):
        zf = z.ravel()
        a = np.empty(zf.shape, dtype=np.complex128)
        b = np.empty(zf.shape, dtype=np.complex128)
        kernels.horner(num, zf, a)
        kernels.horner(den, zf, b)
        if np.any(b == 0):
            raise SingularityError("rational denominator vanished on the evaluation set")
        return (a / b).reshape(z.shape)

    return AnalyticFunction(ev, label, zeros=zeros)


@dataclass(frozen=True)
class KernelParams:
    """Parameters of K(z) = (1-|lam|^2)^{a-2/q} (1 - conj(lam) z)^{-a}."""

    lam: complex
    a: float
    q: float

    def __post_init__(self):
        if not abs(self.lam) < 1.0:
            raise DomainError("kernel base point must lie in the open disc")
        if not self.a * self.q > 2.0:
            raise DomainError("kernel needs a q > 2, got a=%r q=%r" % (self.a, self.q))


def kernel(params, a=None, q=None):
    """Zero-free kernel K(z) = (1-|lam|^2)^{a-2/q} (1 - conj(lam) z)^{-a}.

    Accepts kernel(KernelParams(...)) or kernel(lam, a, q).  |arg K| < a pi/2.
    """
    if not isinstance(params, KernelParams):
        params = KernelParams(complex(params), float(a), float(q))
    lam, a, q = params.lam, params.a, params.q
    scale = (1.0 - abs(lam) ** 2) ** (a - 2.0 / q)
    conj_lam = np.conj(lam)

    def ev(z):
        return scale * np.exp(-a * np.log(1.0 - conj_lam * z))

    f = AnalyticFunction(ev, "kernel(lam=%s,a=%g,q=%g)" % (lam, a, q),
                         zeros=(), arg_bound=a * math.pi / 2.0)
    f.kernel_params = (abs(lam), a, math.log(scale) if scale > 0 else -math.inf)
    return f


def blaschke(zeros):
    """Finite Blaschke product with the given zeros (multiplicity by repetition).

    Factors are normalized positive at the origin; zeros at the origin
    contribute plain factors z.  Unimodular on |z| = 1.
    """
    zs = tuple(complex(a) for a in zeros)
    for a in zs:
        if not abs(a) < 1.0:
            raise DomainError("Blaschke zeros must lie in the open disc, got %r" % (a,))
    arr = _as_z(np.array(zs if zs else [], dtype=complex))

    def ev(z):
        if arr.size == 0:
            return np.ones(z.shape, dtype=np.complex128)
        out = np.empty(z.shape, dtype=np.complex128)
        kernels.blaschke_eval(arr, z.ravel(), out.ravel())
        return out

    return AnalyticFunction(ev, "B(%d zeros)" % len(zs), zeros=zs)


def mobius(lam):
    """Disc automorphism phi(z) = (lam - z)/(1 - conj(lam) z); an involution."""
    lam = complex(lam)
    if not abs(lam) < 1.0:
        raise DomainError("mobius base point must lie in the open disc")
    conj_lam = np.conj(lam)

    def ev(z):
        return (lam - z) / (1.0 - conj_lam * z)

    return AnalyticFunction(ev, "phi_%s" % lam, zeros=(lam,))


def power_one_minus_z(s):
    """(1 - z)^s with the principal branch; zero-free on the open disc.

    For s < 0 the boundary point z = 1 is singular, so boundary sampling is
    disallowed.
    """
    s = float(s)

    def ev(z):
        return np.exp(s * np.log(1.0 - z))

    return AnalyticFunction(ev, "(1-z)^%g" % s, zeros=(),
                            arg_bound=abs(s) * math.pi / 2.0,
                            boundary_ok=s >= 0.0)


def product(factors, label=None):
    """Pointwise product; zero lists concatenate when all factors know theirs."""
    factors = tuple(factors)
    if any(f.is_zero for f in factors):
        return constant_fn(0.0)
    zeros = None
    if all(f.zeros is not None for f in factors):
        zeros = sum((f.zeros for f in factors), ())
    bound = None
    if all(f.arg_bound is not None for f in factors):
        bound = sum(f.arg_bound for f in factors)

    def ev(z):
        out = np.ones(z.shape, dtype=np.complex128)
        for f in factors:
            out = out * f.eval_fn(z)
        return out

    return AnalyticFunction(ev, label or "*".join(f.label for f in factors),
                            zeros=zeros, arg_bound=bound,
                            boundary_ok=all(f.boundary_ok for f in factors))


def from_callable(fn, label="f", **meta):
    """Wrap a plain vectorized callable; metadata as keyword arguments."""
    return AnalyticFunction(lambda z: np.asarray(fn(z), dtype=np.complex128),
                            label, **meta)


# ---------------------------------------------------------------------------
# zero removal


def divide_out_zeros(f):
    """Quotient of f by the Blaschke product over its listed zeros.

    The zero list must be complete; the quotient is then zero-free and
    analytic.  Near each listed zero the quotient is evaluated as the mean
    over a radius-1e-6 circle (the mean-value property of the analytic
    continuation), avoiding 0/0.
    """
    if f.zeros is None:
        raise DomainError("divide_out_zeros needs the complete zero list "
                          "(use zeros=() for zero-free functions)")
    if not f.zeros:
        return f
    b = blaschke(f.zeros)
    zs = np.array(f.zeros, dtype=complex)

    def ev(z):
        zf = z.ravel()
        dist = np.full(zf.shape, np.inf)
        for a in zs:
            np.minimum(dist, np.abs(zf - a), out=dist)
        near = dist < 1.0e-7
        with np.errstate(divide="ignore", invalid="ignore"):
            out = f.eval_fn(zf) / b.eval_fn(zf)
        if np.any(near):
            ring = 1.0e-6 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 16, endpoint=False))
            for i in np.nonzero(near)[0]:
                circ = zf[i] + ring
                out[i] = np.mean(f.eval_fn(circ) / b.eval_fn(circ))
        return out.reshape(z.shape)

    return AnalyticFunction(ev, "(%s)/B" % f.label, zeros=(),
                            boundary_ok=f.boundary_ok)


# ---------------------------------------------------------------------------
# argument-tracked roots and complex powers


def nth_root(g, n, steps=64, max_steps=2048):
    """g^{1/n} for zero-free g, with the argument continued radially from 0.

    The branch is fixed by taking the principal argument at g(0).  Steps
    along each radius double until every increment of arg g stays below 1
    radian (BranchError at the cap).  The result carries arg_fn so further
    powers stay on the same branch.
    """
    if n < 1:
        raise DomainError("root order must be >= 1")
    g0 = complex(np.asarray(g(0.0)).ravel()[0])
    if g0 == 0:
        raise SingularityError("nth_root requires g(0) != 0")
    base_arg = math.atan2(g0.imag, g0.real)

    def continued_arg(z):
        zf = _as_z(z).ravel()
        m = steps
        while True:
            t = np.linspace(0.0, 1.0, m + 1)
            vals = g.eval_fn(np.outer(t, zf))
            if np.any(vals == 0):
                raise SingularityError("zero of g hit during argument continuation")
            inc = np.angle(vals[1:] / vals[:-1])
            peak = float(np.max(np.abs(inc))) if inc.size else 0.0
            if peak < 1.0:
                total = base_arg + np.sum(inc, axis=0)
                return total.reshape(np.asarray(z).shape), vals[-1].reshape(np.asarray(z).shape)
            if m >= max_steps:
                raise BranchError("argument increment %.3f rad at %d steps" % (peak, m))
            m *= 2

    def ev(z):
        arg, gz = continued_arg(z)
        return np.exp((np.log(np.abs(gz)) + 1j * arg) / n)

    root = AnalyticFunction(ev, "(%s)^(1/%d)" % (g.label, n), zeros=(),
                            boundary_ok=g.boundary_ok)
    root.arg_fn = lambda z: continued_arg(z)[0] / n
    if g.arg_bound is not None:
        root.arg_bound = g.arg_bound / n
    return root


def complex_power(f, phat, s=0.5):
    """f(z)^{s p_hat(z)} = exp(s p_hat(z) (log|f(z)| + i arg f(z))).

    f must be zero-free with a controlled argument: either arg_fn (a
    continuous branch) or a certified arg_bound < pi.  The modulus satisfies
    |f^{s p_hat}| = |f|^{s p} exp(-s p_tilde arg f) pointwise.
    """
    if f.is_zero:
        raise SingularityError("cannot raise the zero function to a complex power")
    if f.arg_fn is None and (f.arg_bound is None or f.arg_bound >= math.pi):
        raise BranchError("complex_power needs arg_fn or a certified arg bound < pi")

    def ev(z):
        fz = f.eval_fn(z)
        mag = np.abs(fz)
        if np.any(mag == 0.0):
            raise SingularityError("zero of f hit in complex_power")
        arg = f.arg_fn(z) if f.arg_fn is not None else np.angle(fz)
        w = s * phat.hat_value(z)
        return np.exp(w * (np.log(mag) + 1j * arg))

    return AnalyticFunction(ev, "(%s)^(%g p^)" % (f.label, s), zeros=(),
                            boundary_ok=f.boundary_ok)


# ---------------------------------------------------------------------------
# Riesz splitting and the bounded-argument decomposition


def riesz_split(f, modes=256, tol=1.0e-6):
    """Split f by the sign of its boundary real part: f = f1 - f2 with
    Re f1 >= 0, Re f2 >= 0 (up to truncation), Im f1(0) = Im f(0), Im f2(0) = 0.

    Both halves are analytic completions of the nonnegative/nonpositive
    parts of Re f on the sampling circle, truncated to `modes` Fourier
    modes.  When one half vanishes identically the exact f (or -f) is
    returned for the other.  The reconstruction f1 - f2 is checked against
    f on an interior ring; residuals beyond tol raise AccuracyError.
    """
    n_fft = 1 << max(11, int(2 * modes).bit_length())
    radius = 1.0 if f.boundary_ok else 1.0 - 2.0 ** -20
    vals = f.eval_fn(radius * unit_nodes(n_fft))
    h = vals.real
    scale = max(float(np.max(np.abs(h))), 1.0e-300)
    f0 = complex(np.asarray(f(0.0)).ravel()[0])

    def completion(side_vals, imag0):
        c = np.fft.fft(side_vals) / n_fft
        coeffs = np.empty(modes + 1, dtype=np.complex128)
        coeffs[0] = c[0].real + 1j * imag0
        coeffs[1:] = 2.0 * c[1:modes + 1]
        pol = polynomial(coeffs)
        pol.arg_bound = math.pi / 2.0 + ARG_PAD
        return pol

    neg_peak = float(np.max(np.maximum(-h, 0.0)))
    pos_peak = float(np.max(np.maximum(h, 0.0)))
    if neg_peak <= 1.0e-12 * scale:
        # boundary real part is already nonnegative: keep f exactly
        bound = f.arg_bound if f.arg_bound is not None else math.pi / 2.0 + ARG_PAD
        f1 = AnalyticFunction(f.eval_fn, f.label, zeros=f.zeros,
                              arg_bound=min(bound, math.pi / 2.0 + ARG_PAD),
                              arg_fn=f.arg_fn, boundary_ok=f.boundary_ok)
        f2 = constant_fn(0.0)
    elif pos_peak <= 1.0e-12 * scale:
        f1 = constant_fn(0.0)
        f2 = AnalyticFunction(lambda z: -f.eval_fn(z), "-%s" % f.label,
                              zeros=f.zeros, boundary_ok=f.boundary_ok,
                              arg_bound=math.pi / 2.0 + ARG_PAD)
    else:
        f1 = completion(np.maximum(h, 0.0), f0.imag)
        f2 = completion(np.maximum(-h, 0.0), 0.0)
    ring = 0.7 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 16, endpoint=False))
    resid = np.max(np.abs(f1.eval_fn(ring) - f2.eval_fn(ring) - f.eval_fn(ring)))
    resid = float(resid)
    if resid > tol * max(1.0, scale):
        raise AccuracyError("Riesz split residual %g exceeds %g" % (resid, tol), resid)
    return f1, f2


def bounded_arg_decompose(f, phat, modes=256, tol=1.0e-6):
    """Write f = B sum_j C(n,j) f1^{n-j} (-f2)^j with controlled arguments.

    B is the Blaschke product over f's listed zeros; n is the least integer
    with n p_- >= 2; f1, f2 come from the Riesz split of the n-th root of
    f/B.  Each part carries arg_fn and a certified arg_bound (n(pi/2+eps),
    plus pi for the sign-carrying odd-j parts); the pieces (f1, f2) each
    satisfy the pi/2 + eps bound.  Reconstruction is verified at interior
    points (AccuracyError past tol).
    """
    if f.is_zero:
        raise DomainError("cannot decompose the zero function")
    p_minus = phat.p_minus
    n = max(1, math.ceil(2.0 / p_minus - 1.0e-12))
    g = divide_out_zeros(f)
    root = g if n == 1 else nth_root(g, n)
    f1, f2 = riesz_split(root, modes, tol)
    b = blaschke(f.zeros)

    parts = []
    for j in range(n + 1):
        comb = math.comb(n, j)
        part = _binomial_part(f1, f2, n, j, comb)
        parts.append(part)

    ring = np.concatenate([[0.0 + 0.0j],
                           0.5 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 15,
                                                         endpoint=False))])
    total = np.zeros(ring.shape, dtype=complex)
    for part in parts:
        total = total + part.eval_fn(ring)
    recon = b.eval_fn(ring) * total
    target = f.eval_fn(ring)
    scale = max(float(np.max(np.abs(target))), 1.0e-300)
    resid = float(np.max(np.abs(recon - target))) / scale
    if resid > tol:
        raise AccuracyError("decomposition residual %g exceeds %g" % (resid, tol), resid)
    return Decomposition(b, tuple(parts), (f1, f2), n, root, g, resid)


def _binomial_part(f1, f2, n, j, comb):
    if (j > 0 and f2.is_zero) or (j < n and f1.is_zero):
        return constant_fn(0.0)

    def ev(z):
        out = np.full(z.shape, complex(comb))
        if n - j:
            out = out * f1.eval_fn(z) ** (n - j)
        if j:
            out = out * (-f2.eval_fn(z)) ** j
        return out

    b1 = f1.arg_bound if f1.arg_bound is not None else math.pi / 2.0 + ARG_PAD
    b2 = f2.arg_bound if f2.arg_bound is not None else math.pi / 2.0 + ARG_PAD
    bound = (n - j) * b1 + j * b2 + (math.pi if j % 2 else 0.0)

    def arg_fn(z):
        acc = np.zeros(np.asarray(z).shape, dtype=float)
        if n - j:
            acc = acc + (n - j) * np.angle(f1.eval_fn(_as_z(z)))
        if j:
            acc = acc + j * (np.angle(f2.eval_fn(_as_z(z))) + math.pi)
        return acc

    part = AnalyticFunction(ev, "C(%d,%d) f1^%d (-f2)^%d" % (n, j, n - j, j),
                            arg_bound=bound, arg_fn=arg_fn,
                            boundary_ok=f1.boundary_ok and f2.boundary_ok)
    return part


# ---------------------------------------------------------------------------
# Carleson test functions and subordination


def carleson_test_function(z0, phat):
    """g(z) = (1 - |z0|^2)^{1/p(e^{i t0})} (1 - conj(z0) z)^{-2/p_hat(z)}.

    Concentrates unit-scale mass on the Carleson square at t0 = arg z0 with
    side 1 - |z0|; the family is norm-bounded in the Hardy sense while its
    values on the square grow like (1 - |z0|)^{-1/p}.
    """
    z0 = complex(z0)
    rho = abs(z0)
    if not rho < 1.0:
        raise DomainError("test function base point must lie in the open disc")
    theta0 = math.atan2(z0.imag, z0.real)
    p0 = float(phat.hat_value(np.array([np.exp(1j * theta0)]))[0].real)
    amp = (1.0 - rho * rho) ** (1.0 / p0)
    conj_z0 = np.conj(z0)

    def ev(z):
        w = -2.0 / phat.hat_value(z)
        return amp * np.exp(w * np.log(1.0 - conj_z0 * z))

    return AnalyticFunction(ev, "testfn(z0=%s)" % z0, zeros=())


def subordinate(big_f, omega, n_check=2000):
    """Composition F(omega(z)) for a subordinator omega.

    omega must fix 0 and satisfy |omega(z)| <= |z|; both are checked on a
    sample grid (SubordinationError on failure).
    """
    w0 = abs(complex(np.asarray(omega(0.0)).ravel()[0]))
    if w0 > 1.0e-10:
        raise SubordinationError("omega(0) = %g != 0" % w0)
    n_r = max(8, int(math.sqrt(n_check / 2)))
    n_t = max(8, n_check // n_r)
    radii = np.linspace(0.05, 0.99, n_r)
    angles = np.linspace(0.0, 2.0 * math.pi, n_t, endpoint=False)
    grid = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    w = omega.eval_fn(grid)
    excess = np.abs(w) - np.abs(grid)
    if float(np.max(excess)) > 1.0e-10:
        raise SubordinationError("|omega(z)| exceeds |z| by %g on the check grid"
                                 % float(np.max(excess)))

    def ev(z):
        return big_f.eval_fn(omega.eval_fn(z))

    return AnalyticFunction(ev, "%s o %s" % (big_f.label, omega.label),
                            boundary_ok=big_f.boundary_ok and omega.boundary_ok)
