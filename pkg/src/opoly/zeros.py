"""Zeros of the constructed polynomials.

For a finite family and ``n > N`` the polynomial vanishes on the mass points,
so that factor is removed exactly before any floating-point work.  The
cofactor is recentred at its root centroid and solved by Aberth–Ehrlich
iteration, then each root gets a few Newton steps.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import Poly, affine_substitute, as_exact, to_complex
from .errors import NonConvergence
from .families import Family, Hahn, hypergeometric_build
from . import kernels

__all__ = ["ZeroSet", "ZeroStructureReport", "roots", "to_csv", "zero_structure_report"]


@dataclass
class ZeroSet:
    """Roots of ``p_n``.

    For quadratic-lattice families the roots are values of the lattice
    variable ``lambda``; ``integer_roots`` then lists the mass points ``x = j``
    whose lattice values ``λ(j)`` are roots.
    """

    spec: Family
    n: int
    integer_roots: list[int]
    residual_roots: np.ndarray
    backward_errors: np.ndarray
    cofactor: Poly
    iterations: int = 0
    variable: str = "x"

    def __len__(self):
        return len(self.integer_roots) + len(self.residual_roots)

    def all_roots(self) -> np.ndarray:
        lat = self.spec.lattice
        if lat is not None and lat.shift is not None:
            s = complex(to_complex(lat.shift))
            ints = [j * (j + s) for j in self.integer_roots]
        else:
            ints = list(self.integer_roots)
        return np.concatenate([np.array(ints, dtype=complex), self.residual_roots])


def _mass_factor(spec: Family) -> Poly:
    lat = spec.lattice
    if lat is not None and lat.shift is not None:
        roots_ = [as_exact(j * (j + lat.shift)) for j in range(spec.N + 1)]
        return Poly(Poly.from_roots(roots_).coeffs, "lambda", lat)
    return Poly.from_roots(range(spec.N + 1))


def _initial_guess(coeffs: np.ndarray) -> np.ndarray:
    d = len(coeffs) - 1
    radius = 1 + float(np.max(np.abs(coeffs[:-1] / coeffs[-1])))  # Cauchy bound
    k = np.arange(d)
    return radius * np.exp(1j * (2 * np.pi * k / d + 0.4))


def _newton(coeffs: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    dcoeffs = coeffs[1:] * np.arange(1, len(coeffs))
    for _ in range(steps):
        p = kernels.horner(coeffs, z)
        dp = kernels.horner(dcoeffs, z)
        ok = dp != 0
        step = np.where(ok, p / np.where(ok, dp, 1), 0)
        z_new = z - step
        # keep a step only if it does not increase the residual
        better = np.abs(kernels.horner(coeffs, z_new)) <= np.abs(p)
        z = np.where(better, z_new, z)
    return z


def _backward_errors(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    num = np.abs(kernels.horner(coeffs, z))
    den = kernels.horner(np.abs(coeffs).astype(complex), np.abs(z).astype(complex)).real
    return num / np.where(den > 0, den, 1.0)


def roots(spec: Family, n: int, maxiter: int = 200, tol: float = 1e-10) -> ZeroSet:
    """All ``n`` roots of ``p_n``: exact mass points plus Aberth roots of the cofactor."""
    p = hypergeometric_build(spec, n)
    ints: list[int] = []
    q = p
    if spec.finite and n > spec.N:
        q = p.exact_div(_mass_factor(spec))
        ints = list(range(spec.N + 1))
    d = q.degree
    if d <= 0:
        return ZeroSet(spec, n, ints, np.zeros(0, complex), np.zeros(0), q, 0, spec.var)
    # recentre at the centroid of the roots
    centre = as_exact(-q.coeff(d - 1) / (d * q.lc))
    shifted = affine_substitute(Poly(q.coeffs, "x"), 1, centre)
    coeffs = shifted.to_array()
    if d == 1:
        z = np.array([-coeffs[0] / coeffs[1]])
        its = 0
    else:
        z, its, converged = kernels.aberth(coeffs, _initial_guess(coeffs), maxiter)
        z = _newton(coeffs, z)
        if not converged:
            worst = float(np.max(_backward_errors(coeffs, z)))
            if worst > tol:
                raise NonConvergence(f"Aberth iteration stalled after {maxiter} steps",
                                     residual=worst)
    berr = _backward_errors(coeffs, z)
    z = z + complex(to_complex(centre))
    return ZeroSet(spec, n, ints, z, berr, q, int(its), spec.var)


def _sorted_residual(zs: ZeroSet) -> np.ndarray:
    r = zs.residual_roots
    order = np.lexsort((r.real, r.imag))
    return r[order]


def to_csv(zs: ZeroSet) -> str:
    """``re,im,kind`` rows: integer roots ascending, then residual roots by (Im, Re)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "kind"])
    for j in sorted(zs.integer_roots):
        w.writerow([j, 0, "integer"])
    for r in _sorted_residual(zs):
        w.writerow([repr(float(r.real)), repr(float(r.imag)), "residual"])
    return buf.getvalue()


def _conjugate_symmetric(r: np.ndarray, tol: float) -> bool:
    left = list(r)
    while left:
        z = left.pop()
        if abs(z.imag) <= tol:
            continue
        j = min(range(len(left)), key=lambda i: abs(left[i] - z.conjugate()), default=None)
        if j is None or abs(left[j] - z.conjugate()) > tol * max(1.0, abs(z)):
            return False
        left.pop(j)
    return True


@dataclass
class ZeroStructureReport:
    zeros: ZeroSet
    integer_roots_ok: bool
    line_check: str
    max_line_deviation: float | None
    conjugate_symmetric: bool | None
    csv: str = field(repr=False, default="")

    @property
    def passed(self) -> bool:
        return self.integer_roots_ok and self.line_check != "fail" \
            and self.conjugate_symmetric is not False

    def to_dict(self) -> dict:
        return {"family": self.zeros.spec.name, "n": self.zeros.n,
                "integer_roots": self.zeros.integer_roots,
                "residual_count": int(len(self.zeros.residual_roots)),
                "integer_roots_ok": self.integer_roots_ok, "line_check": self.line_check,
                "max_line_deviation": self.max_line_deviation,
                "conjugate_symmetric": self.conjugate_symmetric,
                "max_backward_error": float(np.max(self.zeros.backward_errors, initial=0.0))}


def zero_structure_report(spec: Family, n: int, line_tol: float = 1e-8,
                          pair_tol: float = 1e-10) -> ZeroStructureReport:
    """Mass-point roots, the vertical line for symmetric Hahn, and conjugate pairing."""
    if not spec.finite or n <= spec.N:
        raise ValueError("the zero structure report needs a finite family and n > N")
    zs = roots(spec, n)
    ints_ok = sorted(zs.integer_roots) == list(range(spec.N + 1))
    line, dev = "skipped", None
    if isinstance(spec, Hahn) and spec.alpha == spec.beta:
        if len(zs.residual_roots):
            dev = float(np.max(np.abs(zs.residual_roots.real - spec.N / 2)))
        else:
            dev = 0.0
        line = "pass" if dev <= line_tol else "fail"
    sym = None
    if spec.params() and all(not hasattr(v, "im") or v.im == 0 for v in spec.params().values()):
        sym = _conjugate_symmetric(zs.residual_roots, pair_tol)
    return ZeroStructureReport(zs, ints_ok, line, dev, sym, to_csv(zs))
