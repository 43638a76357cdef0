# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels: complex log-Gamma, Horner evaluation, Aberth iteration."""

import numpy as np
cimport numpy as cnp

cdef extern from "complex.h" nogil:
    double complex clog(double complex)
    double complex cexp(double complex)
    double complex conj(double complex)
    double creal(double complex)
    double cimag(double complex)
    double cabs(double complex)

cdef double LANCZOS_G = 7.0
cdef double[9] LANCZOS_COEFFS = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]
cdef double HALF_LOG_2PI = 0.91893853320467274178
cdef double LOG_PI = 1.14472988584940017414
cdef double PI = 3.14159265358979323846


cdef inline double complex _loggamma_right(double complex z) nogil:
    cdef double complex acc = LANCZOS_COEFFS[0]
    cdef double complex t
    cdef int k
    z = z - 1.0
    for k in range(1, 9):
        acc = acc + LANCZOS_COEFFS[k] / (z + k)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (z + 0.5) * clog(t) - t + clog(acc)


cdef inline double complex _log_sin_pi(double complex z) nogil:
    cdef bint flip = cimag(z) < 0
    cdef double complex w = conj(z) if flip else z
    cdef double complex e = cexp(2j * PI * w)
    cdef double complex out = clog(0.5j) - 1j * PI * w + clog(1.0 - e)
    return conj(out) if flip else out


cdef inline double complex _loggamma(double complex z) nogil:
    if creal(z) < 0.5:
        return LOG_PI - _log_sin_pi(z) - _loggamma_right(1.0 - z)
    return _loggamma_right(z)


def loggamma(z):
    """Complex log-Gamma (Lanczos, g=7) with reflection for Re z < 1/2."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zz = np.ascontiguousarray(
        np.asarray(z, dtype=complex).ravel())
    cdef Py_ssize_t n = zz.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=complex)
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            out[i] = _loggamma(zz[i])
    return out.reshape(np.shape(z))


cdef inline double complex _horner(const double complex[:] c, double complex z) nogil:
    cdef double complex acc = 0
    cdef Py_ssize_t k
    for k in range(c.shape[0] - 1, -1, -1):
        acc = acc * z + c[k]
    return acc


def horner(coeffs, z):
    """Evaluate the polynomial with low-to-high ``coeffs`` at every point of ``z``."""
    cdef const double complex[:] c = np.ascontiguousarray(np.asarray(coeffs, dtype=complex))
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] zz = np.ascontiguousarray(
        np.asarray(z, dtype=complex).ravel())
    cdef Py_ssize_t n = zz.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=complex)
    cdef Py_ssize_t i
    if c.shape[0] == 0:
        out[:] = 0
        return out.reshape(np.shape(z))
    cdef Py_ssize_t k
    cdef double complex ck
    # degree-major order keeps the per-point updates independent
    with nogil:
        for i in range(n):
            out[i] = c[c.shape[0] - 1]
        for k in range(c.shape[0] - 2, -1, -1):
            ck = c[k]
            for i in range(n):
                out[i] = out[i] * zz[i] + ck
    return out.reshape(np.shape(z))


def aberth(coeffs, z0, int maxiter=200, double tol=1e-15):
    """Aberth-Ehrlich simultaneous iteration; returns ``(roots, iterations, converged)``."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] c_arr = np.ascontiguousarray(
        np.asarray(coeffs, dtype=complex))
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] d_arr = np.ascontiguousarray(
        c_arr[1:] * np.arange(1, c_arr.shape[0]))
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] z_arr = np.array(z0, dtype=complex)
    cdef const double complex[:] c = c_arr
    cdef const double complex[:] d = d_arr
    cdef double complex[:] z = z_arr
    cdef Py_ssize_t n = z.shape[0]
    cdef Py_ssize_t i, j
    cdef int it
    cdef double biggest, rel
    cdef double complex p, dp, ratio, s, step
    for it in range(1, maxiter + 1):
        biggest = 0.0
        for i in range(n):
            p = _horner(c, z[i])
            if p == 0:
                continue
            dp = _horner(d, z[i])
            ratio = p / dp if dp != 0 else p
            s = 0
            for j in range(n):
                if j != i:
                    s = s + 1.0 / (z[i] - z[j])
            step = ratio / (1.0 - ratio * s)
            z[i] = z[i] - step
            rel = cabs(step) / (1.0 + cabs(z[i]))
            if rel > biggest:
                biggest = rel
        if biggest <= tol:
            return z_arr, it, True
    return z_arr, maxiter, False
