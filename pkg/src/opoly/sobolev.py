"""Δ-Sobolev inner products: exact discrete part plus a contour integral.

The discrete part is a finite exact sum over the mass points.  The contour
part integrates the (N+1)-fold differences of both arguments against a
Gamma-product weight along a vertical line that separates the weight's
increasing and decreasing pole sequences.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .algebra import (
    GaussianRational, Poly, as_exact, delta_pow, format_scalar, lattice_divided_difference,
    to_complex,
)
from .errors import (
    ConditionViolated, ContourInvalid, DegenerateParameters, NumericBreakdown, SeriesDiverges,
    TailTooFat,
)
from .families import (
    ContourWeight, DualHahn, Family, Hahn, Krawtchouk, Meixner, Racah, discrete_weight,
    hypergeometric_build, meixner_weight, sobolev_weight, weight_normalization,
)

__all__ = [
    "Contour", "ContourValue", "GramReport", "MeixnerPair", "QuadratureSpec", "characterize",
    "contour_inner", "discrete_inner", "gram", "hahn_conditions", "meixner_orthogonality_pair",
    "meixner_series", "sobolev_inner",
]

CERTIFY_TOL = 1e-8


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite rule on ``Im z ∈ [-T, T]``.

    ``panels`` defaults to unit-length panels (``2T`` of them); ``order`` is
    the number of Gauss–Legendre nodes per panel.
    """

    T: float = 40.0
    panels: int | None = None
    order: int = 64
    rule: str = "gauss_legendre"
    tail_tolerance: float = 1e-14

    def __post_init__(self):
        if self.T <= 0:
            raise ValueError("truncation T must be positive")
        if self.rule not in ("gauss_legendre", "trapezoid"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")

    @property
    def n_panels(self) -> int:
        return self.panels if self.panels is not None else max(1, int(round(2 * self.T)))

    def to_dict(self) -> dict:
        return {"T": self.T, "panels": self.n_panels, "order": self.order, "rule": self.rule,
                "tail_tolerance": self.tail_tolerance}


@lru_cache(maxsize=32)
def _unit_rule(rule: str, order: int):
    if rule == "gauss_legendre":
        x, w = np.polynomial.legendre.leggauss(order)
        return (x + 1) / 2, w / 2
    x = np.linspace(0.0, 1.0, order + 1)
    w = np.full(order + 1, 1.0 / order)
    w[0] = w[-1] = 0.5 / order
    return x, w


def _nodes(T: float, panels: int, rule: str, order: int):
    """Nodes ``t`` and weights on ``[-T, T]``."""
    ux, uw = _unit_rule(rule, order)
    h = 2 * T / panels
    starts = -T + h * np.arange(panels)
    t = (starts[:, None] + h * ux[None, :]).ravel()
    w = np.tile(h * uw, panels)
    return t, w


@dataclass(frozen=True)
class Contour:
    sigma: float
    increasing_poles: tuple = ()
    decreasing_poles: tuple = ()

    @property
    def separation_ok(self) -> bool:
        return (all(complex(p).real > self.sigma for p in self.increasing_poles)
                and all(complex(p).real < self.sigma for p in self.decreasing_poles))

    @classmethod
    def for_weight(cls, weight: ContourWeight, sigma: float | None = None) -> "Contour":
        """Vertical line for ``weight``; by default the middle of the separating strip."""
        inc, dec = weight.poles()
        if sigma is None:
            lo = max((p.real for p in dec), default=None)
            hi = min((p.real for p in inc), default=None)
            if lo is None and hi is None:
                sigma = 0.0
            elif lo is None:
                sigma = hi - 0.5
            elif hi is None:
                sigma = lo + 0.5
            else:
                if lo >= hi:
                    raise ContourInvalid(
                        f"no vertical line separates the poles: decreasing reach {lo}, "
                        f"increasing start at {hi}")
                sigma = (lo + hi) / 2
        return cls(float(sigma), tuple(inc), tuple(dec))

    def to_dict(self) -> dict:
        return {"sigma": self.sigma, "separation_ok": self.separation_ok}


@dataclass(frozen=True)
class ContourValue:
    value: complex
    error: float
    tail: float


def _poly_values(polys, weight: ContourWeight, z):
    return np.array([weight.eval_poly(p, z) for p in polys])


def _log_weight(weight: ContourWeight, z):
    with np.errstate(over="ignore", invalid="ignore"):
        return weight.log(z)


def _fsum_complex(values) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _contour_matrix(polys, weight, contour, quad, panels):
    t, w = _nodes(quad.T, panels, quad.rule, quad.order)
    z = contour.sigma + 1j * t
    lw = _log_weight(weight, z)
    wz = np.exp(lw) * w * 1j  # dz = i dt
    vals = _poly_values(polys, weight, z)
    n = len(polys)
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            out[i, j] = out[j, i] = _fsum_complex(vals[i] * vals[j] * wz)
    return out


def _tail_check(polys, weight, contour, quad):
    """Bound the mass beyond ``|Im z| = T`` from the decay over the last unit."""
    T = quad.T
    probe = np.array([T - 1.0, T, -(T - 1.0), -T])
    z = contour.sigma + 1j * probe
    lw = _log_weight(weight, z).real
    vals = _poly_values(polys, weight, z) if polys else np.ones((1, 4))
    with np.errstate(divide="ignore"):
        lp = 2 * np.log(np.max(np.abs(vals), axis=0))
    mag = lw + lp
    # peak on a coarse grid
    tg = np.linspace(-T, T, 401)
    zg = contour.sigma + 1j * tg
    vg = _poly_values(polys, weight, zg) if polys else np.ones((1, tg.size))
    with np.errstate(divide="ignore"):
        peak = np.max(_log_weight(weight, zg).real + 2 * np.log(np.max(np.abs(vg), axis=0)))
    if not np.isfinite(peak):
        return 0.0
    tail = 0.0
    for inner, outer in ((mag[0], mag[1]), (mag[2], mag[3])):
        if not np.isfinite(outer) or outer == -np.inf:
            continue
        rate = inner - outer if np.isfinite(inner) else np.inf
        rel = math.exp(min(outer - peak, 0.0))
        if rate <= 0:
            if rel > quad.tail_tolerance:
                raise TailTooFat(
                    f"integrand does not decay at |Im z| = {T} (relative magnitude {rel:.3e})")
            continue
        tail += rel / rate
    if tail > quad.tail_tolerance:
        raise TailTooFat(f"tail bound {tail:.3e} exceeds tolerance {quad.tail_tolerance:.1e}")
    return tail


def _contour_gram(polys, weight, contour, quad):
    if not contour.separation_ok:
        raise ContourInvalid(f"line Re z = {contour.sigma} does not separate the poles")
    tail = _tail_check(polys, weight, contour, quad)
    P = quad.n_panels
    coarse = _contour_matrix(polys, weight, contour, quad, P)
    fine = _contour_matrix(polys, weight, contour, quad, 2 * P)
    return fine, np.abs(fine - coarse), tail


def contour_inner(f: Poly, g: Poly, weight: ContourWeight, contour: Contour | None = None,
                  quad: QuadratureSpec | None = None) -> ContourValue:
    """``∫ f(z) g(z) w(z) dz`` along ``Re z = σ`` with an error estimate.

    The estimate is the difference between ``P`` and ``2P`` panels.
    """
    quad = quad or QuadratureSpec()
    contour = contour or Contour.for_weight(weight)
    vals, errs, tail = _contour_gram([f, g], weight, contour, quad)
    return ContourValue(complex(vals[0, 1]), float(errs[0, 1]), tail)


# -- discrete part -----------------------------------------------------------------

def _mass_point(spec: Family, x: int):
    lat = spec.lattice
    if lat is None or lat.shift is None:
        return Fraction(x)
    return as_exact(x * (x + lat.shift))


def discrete_inner(f: Poly, g: Poly, spec: Family):
    """Exact ``Σ_{x=0}^{N} f g w(x)`` with Pochhammer-normalized weights."""
    if not spec.finite:
        raise DegenerateParameters(f"{spec.name} has no finite mass-point set", factor="N")
    total = Fraction(0)
    for x in range(spec.N + 1):
        v = _mass_point(spec, x)
        fv = f(v)
        if fv == 0:
            continue
        total = total + fv * g(v) * discrete_weight(spec, x)
    return as_exact(total)


def _discrete_matrix(polys, spec: Family):
    pts = [_mass_point(spec, x) for x in range(spec.N + 1)]
    w = [discrete_weight(spec, x) for x in range(spec.N + 1)]
    vals = [[p(v) for v in pts] for p in polys]
    n = len(polys)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = Fraction(0)
            for x in range(len(pts)):
                if vals[i][x] and vals[j][x]:
                    s = s + vals[i][x] * vals[j][x] * w[x]
            out[i][j] = out[j][i] = as_exact(s)
    return out


# -- the Sobolev product -----------------------------------------------------------

def hahn_conditions(alpha, beta, N: int) -> list[str]:
    """Violated parameter conditions for the Hahn Sobolev characterization."""

    def hits(value, top, skip):
        v = as_exact(value)
        if isinstance(v, GaussianRational) or v.denominator != 1:
            return False
        v = int(v)
        return v >= 1 and v != skip and (v <= top or v > skip)

    out = []
    for name, val in (("-α", -as_exact(alpha)), ("-β", -as_exact(beta))):
        if hits(val, N, N + 1):
            out.append(f"{name} = {val} lies in {{1..N, N+2, ...}}")
    ab = -(as_exact(alpha) + as_exact(beta))
    if hits(ab, 2 * N + 1, 2 * N + 2):
        out.append(f"-α-β = {ab} lies in {{1..2N+1, 2N+3, ...}}")
    return out


def _difference(p: Poly, spec: Family) -> Poly:
    k = spec.N + 1
    if spec.lattice is None:
        return delta_pow(p, k)
    return lattice_divided_difference(p, spec.lattice, k)


def _check_conditions(spec: Family):
    if isinstance(spec, Hahn):
        bad = hahn_conditions(spec.alpha, spec.beta, spec.N)
        if bad:
            raise ConditionViolated("; ".join(bad), factor=bad[0].split(" ")[0])


def sobolev_inner(f: Poly, g: Poly, spec: Family, quad: QuadratureSpec | None = None,
                  **weight_options) -> complex:
    """Discrete part (exact, then promoted) plus the contour part on the differences."""
    quad = quad or QuadratureSpec()
    _check_conditions(spec)
    disc = discrete_inner(f, g, spec)
    df, dg = _difference(f, spec), _difference(g, spec)
    if df.is_zero() or dg.is_zero():
        return complex(to_complex(disc))
    weight = sobolev_weight(spec, **weight_options)
    part = contour_inner(df, dg, weight, Contour.for_weight(weight), quad)
    return complex(to_complex(disc)) + part.value


@dataclass
class GramReport:
    family: str
    params: dict
    nmax: int
    entries: np.ndarray
    discrete: list
    flags: list
    errors: np.ndarray
    max_offdiag_rel: float
    min_diag_abs: float
    certified: bool
    quad: dict
    contour: dict = field(default_factory=dict)
    normalization: str = "1"
    tolerance: float = CERTIFY_TOL

    def to_dict(self) -> dict:
        n = self.nmax + 1
        return {
            "family": self.family,
            "params": {k: format_scalar(v) if not isinstance(v, str) else v
                       for k, v in self.params.items()},
            "nmax": self.nmax,
            "entries": [[float(self.entries[i, j].real), float(self.entries[i, j].imag)]
                        for i in range(n) for j in range(n)],
            "max_offdiag_rel": self.max_offdiag_rel,
            "min_diag_abs": self.min_diag_abs,
            "certified": self.certified,
            "quad": self.quad,
            "contour": self.contour,
            "flags": [f for row in self.flags for f in row],
            "dropped_constant": self.normalization,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _stats(G: np.ndarray):
    d = np.abs(np.diag(G))
    n = G.shape[0]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                den = math.sqrt(d[i] * d[j])
                r = abs(G[i, j]) / den if den > 0 else (0.0 if G[i, j] == 0 else math.inf)
                worst = max(worst, r)
    return worst, float(d.min()) if n else 0.0


def _sobolev_matrix(polys, spec, quad, weight_options):
    disc = _discrete_matrix(polys, spec)
    diffs = [_difference(p, spec) for p in polys]
    live = [i for i, d in enumerate(diffs) if not d.is_zero()]
    n = len(polys)
    G = np.array([[complex(to_complex(disc[i][j])) for j in range(n)] for i in range(n)])
    E = np.zeros((n, n))
    flags = [["exact"] * n for _ in range(n)]
    contour_info = {}
    if live:
        weight = sobolev_weight(spec, **weight_options)
        contour = Contour.for_weight(weight)
        vals, errs, tail = _contour_gram([diffs[i] for i in live], weight, contour, quad)
        for a, i in enumerate(live):
            for b, j in enumerate(live):
                G[i, j] += vals[a, b]
                E[i, j] = errs[a, b]
                flags[i][j] = "quadrature"
        contour_info = {"weight": weight.kind, **contour.to_dict(), "tail_bound": float(tail)}
    return G, E, disc, flags, contour_info


def gram(spec: Family, nmax: int, quad: QuadratureSpec | None = None,
         tolerance: float = CERTIFY_TOL, **weight_options) -> GramReport:
    """Gram matrix of ``p_0..p_nmax`` under the family's Δ-Sobolev product."""
    quad = quad or QuadratureSpec()
    if not spec.finite:
        raise DegenerateParameters(f"{spec.name} has no Δ-Sobolev product", factor="family")
    _check_conditions(spec)
    polys = [hypergeometric_build(spec, n) for n in range(nmax + 1)]
    G, E, disc, flags, cinfo = _sobolev_matrix(polys, spec, quad, weight_options)
    worst, dmin = _stats(G)
    return GramReport(spec.name, spec.params(), nmax, G, disc, flags, E, worst, dmin,
                      bool(worst <= tolerance and dmin > 0), quad.to_dict(), cinfo,
                      weight_normalization(spec), tolerance)


def characterize(spec: Family, nmax: int, quad: QuadratureSpec | None = None,
                 **weight_options) -> list[Poly]:
    """Monic orthogonalization of ``1, v, ..., v^nmax`` under the Sobolev product.

    The product is bilinear (no conjugation), so the Gram–Schmidt projections
    use plain transposes.
    """
    quad = quad or QuadratureSpec()
    _check_conditions(spec)
    monos = [Poly.monomial(k, spec.var, spec.lattice) for k in range(nmax + 1)]
    M, _, _, _, _ = _sobolev_matrix(monos, spec, quad, weight_options)
    basis: list[np.ndarray] = []
    norms: list[complex] = []
    scale = 0.0
    for n in range(nmax + 1):
        v = np.zeros(nmax + 1, dtype=complex)
        v[n] = 1.0
        for b, nb in zip(basis, norms):
            v = v - (b @ M @ v) / nb * b
        pivot = v @ M @ v
        scale = max(scale, abs(M[n, n]))
        if abs(pivot) < 1e-10 * scale:
            raise NumericBreakdown(f"Gram–Schmidt pivot {abs(pivot):.3e} at degree {n}")
        basis.append(v)
        norms.append(pivot)
    return [Poly([complex(c) for c in b[: n + 1]], spec.var, spec.lattice)
            for n, b in enumerate(basis)]


# -- Meixner ------------------------------------------------------------------------

@dataclass(frozen=True)
class MeixnerPair:
    contour_value: complex | None
    contour_error: float | None
    series_value: complex | None
    scale: float | None
    note: str = ""


def meixner_series(n: int, m: int, beta, c, rel_tol: float = 1e-15, max_terms: int = 100000):
    """``Σ_{x≥0} M_n(x) x^m (β)_x c^x / x!`` for ``|c| < 1``, truncated with a tail bound."""
    beta, c = as_exact(beta), as_exact(c)
    if abs(complex(to_complex(c))) >= 1:
        raise SeriesDiverges(f"series needs |c| < 1, got c = {c}")
    p = hypergeometric_build(Meixner(beta, c), n) * Poly.monomial(m)
    deg = p.degree
    arr = p.to_array()
    radius = 1 + float(np.max(np.abs(arr[:-1]))) if deg > 0 else 0.0  # Cauchy root bound
    cabs = abs(complex(to_complex(c)))
    b = complex(to_complex(beta))
    total = Fraction(0)
    scale = 0.0
    w = Fraction(1)
    for x in range(max_terms):
        term = p(x) * w
        total = total + term
        tabs = abs(complex(to_complex(term)))
        scale = max(scale, tabs)
        if x > radius:
            # each factor decreases in x, so r bounds every later term ratio
            r = (cabs * (1 + abs(b - 1) / (x + 1))
                 * ((x + 1 + radius) / (x - radius)) ** deg)
            if r < 1 and tabs * r / (1 - r) <= rel_tol * scale:
                return complex(to_complex(total))
        w = w * (beta + x) * c / (x + 1)
    raise SeriesDiverges("series did not reach the tail tolerance")


def meixner_orthogonality_pair(n: int, m: int, beta, c, quad: QuadratureSpec | None = None,
                               sigma: float | None = None) -> MeixnerPair:
    """Contour value of ``∫ M_n z^m Γ(-z)Γ(β+z)(-c)^z dz`` and, for 0 < c < 1, the series.

    The series uses the Pochhammer weight ``(β)_x c^x/x!``; the contour integral
    equals ``2πi Γ(β)`` times it wherever both converge.  For ``c`` in
    ``[0, ∞)`` the contour path is unavailable and ``contour_value`` is None.
    """
    quad = quad or QuadratureSpec()
    beta, c = as_exact(beta), as_exact(c)
    bc = complex(to_complex(beta))
    if bc.imag == 0 and bc.real <= 0 and bc.real == int(bc.real):
        raise DegenerateParameters("Meixner orthogonality needs -β ∉ ℕ", factor="β")
    cc = complex(to_complex(c))
    series = None
    if cc.imag == 0 and 0 < cc.real < 1:
        series = meixner_series(n, m, beta, c)
    if cc.imag == 0 and cc.real >= 0:
        return MeixnerPair(None, None, series, None,
                           "contour path needs c outside [0, ∞): the integrand does not decay")
    weight = meixner_weight(beta, c)
    if sigma is None:
        trial = Contour.for_weight(weight, -0.5)
        contour = trial if trial.separation_ok else Contour.for_weight(weight)
    else:
        contour = Contour.for_weight(weight, sigma)
    mn = hypergeometric_build(Meixner(beta, c), n)
    zm = Poly.monomial(m)
    polys = [mn, zm]
    vals, errs, _ = _contour_gram(polys, weight, contour, quad)
    scale = math.sqrt(abs(vals[0, 0]) * abs(vals[1, 1]))
    return MeixnerPair(complex(vals[0, 1]), float(errs[0, 1]), series, scale)
