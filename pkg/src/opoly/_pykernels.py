"""NumPy implementations of the numeric kernels.

Used when the compiled ``_ckernels`` extension is unavailable or when
``OPOLY_PURE=1`` is set.  Signatures match the Cython module exactly.
"""

import numpy as np

LANCZOS_G = 7.0
LANCZOS_COEFFS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)
LOG_PI = np.log(np.pi)


def _log_sin_pi(z):
    # log sin(pi z) modulo 2 pi i, stable for large |Im z|
    flip = z.imag < 0
    w = np.where(flip, np.conj(z), z)
    e = np.exp(2j * np.pi * w)
    out = np.log(0.5j) - 1j * np.pi * w + np.log1p(-e)
    return np.where(flip, np.conj(out), out)


def _loggamma_right(z):
    z = z - 1.0
    acc = np.full(z.shape, LANCZOS_COEFFS[0], dtype=complex)
    for k in range(1, LANCZOS_COEFFS.size):
        acc = acc + LANCZOS_COEFFS[k] / (z + k)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(acc)


def loggamma(z):
    """Complex log-Gamma (Lanczos, g=7) with reflection for Re z < 1/2.

    The imaginary part is only defined modulo 2*pi; exponentiate the result.
    """
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape, dtype=complex)
    left = z.real < 0.5
    if np.any(~left):
        out[~left] = _loggamma_right(z[~left])
    if np.any(left):
        zl = z[left]
        out[left] = LOG_PI - _log_sin_pi(zl) - _loggamma_right(1.0 - zl)
    return out


def horner(coeffs, z):
    """Evaluate the polynomial with low-to-high ``coeffs`` at every point of ``z``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    z = np.asarray(z, dtype=complex)
    acc = np.zeros(z.shape, dtype=complex)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def aberth(coeffs, z0, maxiter=200, tol=1e-15):
    """Aberth-Ehrlich simultaneous iteration.

    Returns ``(roots, iterations, converged)``.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    z = np.array(z0, dtype=complex)
    n = z.size
    deriv = coeffs[1:] * np.arange(1, coeffs.size)
    for it in range(1, maxiter + 1):
        biggest = 0.0
        for i in range(n):
            p = horner(coeffs, z[i:i + 1])[0]
            if p == 0:
                continue
            dp = horner(deriv, z[i:i + 1])[0]
            ratio = p / dp if dp != 0 else p
            diff = z[i] - np.delete(z, i)
            s = np.sum(1.0 / diff) if n > 1 else 0.0
            step = ratio / (1.0 - ratio * s)
            z[i] -= step
            rel = abs(step) / (1.0 + abs(z[i]))
            if rel > biggest:
                biggest = rel
        if biggest <= tol:
            return z, it, True
    return z, maxiter, False
