"""Pure-numpy implementations of the hot inner loops.

Every function here has a numba twin in _kernels_numba.py with the same
signature and semantics; _backend.py picks one set at import time via the
VXS_BACKEND environment variable.  Keep both files in sync.
"""

import numpy as np


def abs_sq_pow_mean(cos_t, c, e):
    """Mean over the nodes of (1 - 2 c cos t + c^2)^e.

    This is the circle mean of |1 - c exp(i t)|^(2e), the workhorse behind
    kernel-function integral means.
    """
    m = (1.0 + c * c) - (2.0 * c) * cos_t
    return float(np.mean(m ** e))


def power_sums(w, logf, p, loglam, offsets, out):
    """Per-segment sums of w * exp(p * (logf - loglam)).

    Segment i covers indices offsets[i]:offsets[i+1].  logf may contain -inf
    (zeros of f contribute 0).  Results are written into out (len(offsets)-1).
    """
    with np.errstate(over="ignore", invalid="ignore"):
        vals = w * np.exp(p * (logf - loglam))
    vals = np.where(np.isnan(vals), 0.0, vals)
    n = len(offsets) - 1
    for i in range(n):
        out[i] = np.sum(vals[offsets[i]:offsets[i + 1]])
    return out


def horner(coeffs, z, out):
    """Evaluate sum_k coeffs[k] z^k (coeffs ascending) into out."""
    out[:] = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        out *= z
        out += coeffs[k]
    return out


def blaschke_eval(zeros, z, out):
    """Product of normalized disc automorphism factors over the zero list.

    Zeros at the origin contribute a plain factor z; others contribute
    (|a|/a)(a - z)/(1 - conj(a) z), positive at z = 0.
    """
    out[:] = 1.0
    for a in zeros:
        if a == 0.0:
            out *= z
        else:
            out *= (abs(a) / a) * (a - z) / (1.0 - np.conj(a) * z)
    return out
