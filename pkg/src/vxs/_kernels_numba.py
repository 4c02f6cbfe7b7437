"""Numba twins of the kernels in _kernels_numpy.py.

Same signatures, same semantics.  Loops are sequential (no prange) so the
results do not depend on the thread count.
"""

import numpy as np
from numba import njit


@njit(cache=True, fastmath=True)
def abs_sq_pow_mean(cos_t, c, e):
    cc = 1.0 + c * c
    tc = 2.0 * c
    s = 0.0
    for i in range(cos_t.size):
        s += (cc - tc * cos_t[i]) ** e
    return s / cos_t.size


@njit(cache=True)
def power_sums(w, logf, p, loglam, offsets, out):
    n = offsets.size - 1
    for i in range(n):
        s = 0.0
        for j in range(offsets[i], offsets[i + 1]):
            if w[j] == 0.0:
                continue
            t = p[j] * (logf[j] - loglam)
            if t > 700.0:
                s = np.inf
            elif t > -745.0:
                s += w[j] * np.exp(t)
        out[i] = s
    return out


@njit(cache=True)
def horner(coeffs, z, out):
    nc = coeffs.size
    for i in range(z.size):
        acc = coeffs[nc - 1]
        zi = z[i]
        for k in range(nc - 2, -1, -1):
            acc = acc * zi + coeffs[k]
        out[i] = acc
    return out


@njit(cache=True)
def blaschke_eval(zeros, z, out):
    for i in range(z.size):
        acc = 1.0 + 0.0j
        zi = z[i]
        for k in range(zeros.size):
            a = zeros[k]
            if a == 0.0:
                acc *= zi
            else:
                acc *= (abs(a) / a) * (a - zi) / (1.0 - np.conj(a) * zi)
        out[i] = acc
    return out
