"""The eight polynomial families, built for every degree.

Each family is a frozen dataclass holding exact parameters.  Polynomials are
monic in the family's variable: ``x`` for Hahn, Krawtchouk, Meixner and
continuous Hahn; the quadratic lattice variable ``lambda`` for Racah and dual
Hahn; the squared variable ``x**2`` (tagged ``lambda``) for Wilson and
continuous dual Hahn.

Construction uses the reduced hypergeometric sum, in which each
denominator Pochhammer that would truncate the series, e.g. ``(-N)_k``, has
been cancelled against the prefactor, so the sum stays valid past the
classical cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebra import (
    GaussianRational, I, Lattice, Poly, as_exact, is_exact, pochhammer, to_complex,
)
from .errors import DegenerateParameters, NoCounterpart, OutOfSupport, PoleHit
from . import kernels

__all__ = [
    "ContinuousDualHahn", "ContinuousHahn", "ContourWeight", "DualHahn", "Hahn",
    "Krawtchouk", "Meixner", "Racah", "RecurrenceCoefficients", "Transform", "Wilson",
    "continuous_log_weight", "discrete_weight", "family_from_name",
    "hypergeometric_build", "recurrence_coefficients", "relate", "ttrr_build",
    "continuous_hahn_weight", "dual_hahn_sobolev_weight", "hahn_sobolev_weight",
    "krawtchouk_sobolev_weight", "meixner_weight", "racah_sobolev_weight", "sobolev_weight",
    "discrete_weight_extended", "weight_normalization", "build_sequence",
]


def _require_nonzero(value, label):
    if value == 0:
        raise DegenerateParameters(f"denominator factor {label} vanishes", factor=label)


def _poch_den(a, n, label):
    """``(a)_n`` for a denominator, naming the first vanishing factor."""
    out = Fraction(1)
    for j in range(n):
        _require_nonzero(a + j, f"{label}+{j}" if j else label)
        out = out * (a + j)
    return out


def _int_of(value, name):
    v = as_exact(value)
    if isinstance(v, GaussianRational) or v.denominator != 1:
        raise DegenerateParameters(f"{name} must be an integer, got {v}", factor=name)
    return int(v)


class Family:
    """Shared machinery; subclasses supply the reduced sum and the recurrence."""

    name = ""
    var = "x"
    finite = False

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "N":
                object.__setattr__(self, f.name, _int_of(value, "N"))
            elif f.name == "branch":
                continue
            else:
                object.__setattr__(self, f.name, as_exact(value))
        self._validate()

    def _validate(self):
        pass

    @property
    def lattice(self) -> Lattice | None:
        return None

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def variable_poly(self) -> Poly:
        return Poly([0, 1], self.var, self.lattice)

    # hooks
    def _terms(self, n: int):
        raise NotImplementedError

    def _recurrence(self, n: int):
        raise NotImplementedError

    def _denominator(self, n: int):
        return Fraction(1)


def _sum_terms(fam: Family, n: int, basis_factor: Callable[[int], Poly]) -> Poly:
    """Sum ``coef_k * prod_{j<k} basis_factor(j)`` for ``k = 0..n``."""
    den = fam._denominator(n)
    total = Poly([], fam.var, fam.lattice)
    running = Poly([1], fam.var, fam.lattice)
    for k, coef in enumerate(fam._terms(n)):
        if k:
            running = running * basis_factor(k - 1)
        if coef:
            total = total + running * coef
    return total / den if den != 1 else total


@dataclass(frozen=True)
class Hahn(Family):
    alpha: object
    beta: object
    N: int

    name = "hahn"
    finite = True

    def _denominator(self, n):
        return _poch_den(self.alpha + self.beta + n + 1, n, "α+β+n+1")

    def _terms(self, n):
        a, b, N = self.alpha, self.beta, self.N
        for k in range(n + 1):
            yield (pochhammer(a + 1 + k, n - k) * pochhammer(-n, k)
                   * pochhammer(a + b + n + 1, k) * pochhammer(-N + k, n - k)
                   / pochhammer(1, k))

    def basis(self, j):
        return Poly([j, -1])  # (-x)_k = prod (j - x)

    def _recurrence(self, n):
        a, b, N = self.alpha, self.beta, self.N
        s = a + b
        if n == 0:
            _require_nonzero(s + 2, "α+β+2")
            return N * (a + 1) / (s + 2), Fraction(0)
        for label, val in (("α+β+2n", s + 2 * n), ("α+β+2n+1", s + 2 * n + 1),
                           ("α+β+2n+2", s + 2 * n + 2), ("α+β+2n-1", s + 2 * n - 1)):
            _require_nonzero(val, label)
        A = lambda m: (N * (a + 1) / (s + 2) if m == 0 else
                       (m + s + 1) * (m + a + 1) * (N - m) / ((2 * m + s + 1) * (2 * m + s + 2)))
        C = n * (n + s + N + 1) * (n + b) / ((2 * n + s) * (2 * n + s + 1))
        return A(n) + C, A(n - 1) * C


@dataclass(frozen=True)
class ContinuousHahn(Family):
    a: object
    b: object
    c: object
    d: object

    name = "continuous_hahn"

    def _s(self):
        return self.a + self.b + self.c + self.d

    def _denominator(self, n):
        return _poch_den(n + self._s() - 1, n, "n+a+b+c+d-1")

    def _terms(self, n):
        a, c, d, s = self.a, self.c, self.d, self._s()
        lead = I ** n
        for k in range(n + 1):
            yield (lead * pochhammer(a + c + k, n - k) * pochhammer(a + d + k, n - k)
                   * pochhammer(-n, k) * pochhammer(n + s - 1, k) / pochhammer(1, k))

    def basis(self, j):
        return Poly([self.a + j, I])  # (a + i x)_k

    def _recurrence(self, n):
        a, b, c, d, s = self.a, self.b, self.c, self.d, self._s()
        if n == 0:
            _require_nonzero(s, "a+b+c+d")
            return I * (a - (a + c) * (a + d) / s), Fraction(0)
        for label, val in (("2n+s-3", 2 * n + s - 3), ("2n+s-2", 2 * n + s - 2),
                           ("2n+s-1", 2 * n + s - 1), ("2n+s", 2 * n + s)):
            if label == "2n+s-3" and n == 1:
                continue
            _require_nonzero(val, label)

        def A(m):
            if m == 0:
                return -(a + c) * (a + d) / s
            return -(m + s - 1) * (m + a + c) * (m + a + d) / ((2 * m + s - 1) * (2 * m + s))

        C = n * (n + b + c - 1) * (n + b + d - 1) / ((2 * n + s - 2) * (2 * n + s - 1))
        return I * (A(n) + C + a), -A(n - 1) * C


@dataclass(frozen=True)
class Wilson(Family):
    a: object
    b: object
    c: object
    d: object

    name = "wilson"
    var = "lambda"

    def _s(self):
        return self.a + self.b + self.c + self.d

    def _denominator(self, n):
        return _poch_den(n + self._s() - 1, n, "n+a+b+c+d-1")

    def _terms(self, n):
        a, b, c, d, s = self.a, self.b, self.c, self.d, self._s()
        sign = (-1) ** n
        for k in range(n + 1):
            yield (sign * pochhammer(a + b + k, n - k) * pochhammer(a + c + k, n - k)
                   * pochhammer(a + d + k, n - k) * pochhammer(-n, k)
                   * pochhammer(n + s - 1, k) / pochhammer(1, k))

    def basis(self, j):
        return Poly([(self.a + j) ** 2, 1], "lambda")  # (a+ix)_k (a-ix)_k in x^2

    def _recurrence(self, n):
        a, b, c, d, s = self.a, self.b, self.c, self.d, self._s()
        if n == 0:
            _require_nonzero(s, "a+b+c+d")
            return (a + b) * (a + c) * (a + d) / s - a * a, Fraction(0)
        for label, val in (("2n+s-2", 2 * n + s - 2), ("2n+s-1", 2 * n + s - 1),
                           ("2n+s", 2 * n + s)):
            _require_nonzero(val, label)

        def A(m):
            if m == 0:
                return (a + b) * (a + c) * (a + d) / s
            return ((m + s - 1) * (m + a + b) * (m + a + c) * (m + a + d)
                    / ((2 * m + s - 1) * (2 * m + s)))

        C = (n * (n + b + c - 1) * (n + b + d - 1) * (n + c + d - 1)
             / ((2 * n + s - 2) * (2 * n + s - 1)))
        return A(n) + C - a * a, A(n - 1) * C


RACAH_BRANCHES = ("alpha", "beta_delta", "gamma")


@dataclass(frozen=True)
class Racah(Family):
    """Racah polynomials on ``lambda(x) = x(x+γ+δ+1)``.

    ``branch`` names the truncation condition that holds: ``"alpha"``
    (α+1=-N), ``"beta_delta"`` (β+δ+1=-N) or ``"gamma"`` (γ+1=-N).
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    branch: str | None = "alpha"

    name = "racah"
    var = "lambda"
    finite = True

    def _validate(self):
        if self.branch is None:
            return
        if self.branch not in RACAH_BRANCHES:
            raise DegenerateParameters(f"unknown Racah branch {self.branch!r}", factor="branch")
        value = self._branch_value()
        if isinstance(value, GaussianRational) or value.denominator != 1 or value > 0:
            raise DegenerateParameters(
                f"Racah branch {self.branch!r} requires its parameter +1 to equal -N "
                f"for an integer N >= 0; got {value}", factor=self.branch)

    def _branch_value(self):
        return {"alpha": self.alpha + 1, "beta_delta": self.beta + self.delta + 1,
                "gamma": self.gamma + 1}[self.branch]

    @property
    def N(self) -> int:
        if self.branch is None:
            raise DegenerateParameters("untruncated Racah polynomials have no N", factor="branch")
        return int(-self._branch_value())

    @property
    def shift(self):
        return self.gamma + self.delta + 1

    @property
    def lattice(self):
        return Lattice.quadratic(self.shift)

    def _denominator(self, n):
        return _poch_den(n + self.alpha + self.beta + 1, n, "n+α+β+1")

    def _terms(self, n):
        al, be, ga, de = self.alpha, self.beta, self.gamma, self.delta
        for k in range(n + 1):
            yield (pochhammer(al + 1 + k, n - k) * pochhammer(be + de + 1 + k, n - k)
                   * pochhammer(ga + 1 + k, n - k) * pochhammer(-n, k)
                   * pochhammer(n + al + be + 1, k) / pochhammer(1, k))

    def basis(self, j):
        return Poly([j * (j + self.shift), -1], "lambda", self.lattice)

    def _recurrence(self, n):
        al, be, ga, de = self.alpha, self.beta, self.gamma, self.delta
        s = al + be
        if n == 0:
            _require_nonzero(s + 2, "α+β+2")
            A0 = (al + 1) * (be + de + 1) * (ga + 1) / (s + 2)
            return -A0, Fraction(0)
        for label, val in (("α+β+2n", s + 2 * n), ("α+β+2n+1", s + 2 * n + 1),
                           ("α+β+2n+2", s + 2 * n + 2), ("α+β+2n-1", s + 2 * n - 1)):
            _require_nonzero(val, label)

        def A(m):
            if m == 0:
                return (al + 1) * (be + de + 1) * (ga + 1) / (s + 2)
            return ((m + al + 1) * (m + s + 1) * (m + be + de + 1) * (m + ga + 1)
                    / ((2 * m + s + 1) * (2 * m + s + 2)))

        C = n * (n + s - ga) * (n + al - de) * (n + be) / ((2 * n + s) * (2 * n + s + 1))
        return -(A(n) + C), A(n - 1) * C


@dataclass(frozen=True)
class DualHahn(Family):
    gamma: object
    delta: object
    N: int

    name = "dual_hahn"
    var = "lambda"
    finite = True

    @property
    def shift(self):
        return self.gamma + self.delta + 1

    @property
    def lattice(self):
        return Lattice.quadratic(self.shift)

    def _terms(self, n):
        ga, N = self.gamma, self.N
        for k in range(n + 1):
            yield (pochhammer(ga + 1 + k, n - k) * pochhammer(-N + k, n - k)
                   * pochhammer(-n, k) / pochhammer(1, k))

    def basis(self, j):
        return Poly([j * (j + self.shift), -1], "lambda", self.lattice)

    def _recurrence(self, n):
        ga, de, N = self.gamma, self.delta, self.N
        A = lambda m: (m + ga + 1) * (m - N)
        C = n * (n - de - N - 1)
        return -(A(n) + C), (A(n - 1) * C if n else Fraction(0))


@dataclass(frozen=True)
class ContinuousDualHahn(Family):
    a: object
    b: object
    c: object

    name = "continuous_dual_hahn"
    var = "lambda"

    def _terms(self, n):
        a, b, c = self.a, self.b, self.c
        sign = (-1) ** n
        for k in range(n + 1):
            yield (sign * pochhammer(a + b + k, n - k) * pochhammer(a + c + k, n - k)
                   * pochhammer(-n, k) / pochhammer(1, k))

    def basis(self, j):
        return Poly([(self.a + j) ** 2, 1], "lambda")

    def _recurrence(self, n):
        a, b, c = self.a, self.b, self.c
        A = lambda m: (m + a + b) * (m + a + c)
        C = n * (n + b + c - 1)
        return A(n) + C - a * a, (A(n - 1) * C if n else Fraction(0))


@dataclass(frozen=True)
class Krawtchouk(Family):
    p: object
    N: int

    name = "krawtchouk"
    finite = True

    def _validate(self):
        if self.p == 0 or self.p == 1:
            raise DegenerateParameters("Krawtchouk requires p ∉ {0, 1}", factor="p")

    def _terms(self, n):
        p, N = self.p, self.N
        for k in range(n + 1):
            yield (pochhammer(-n, k) * pochhammer(-N + k, n - k) * p ** (n - k)
                   / pochhammer(1, k))

    def basis(self, j):
        return Poly([j, -1])

    def _recurrence(self, n):
        p, N = self.p, self.N
        return p * (N - n) + n * (1 - p), n * p * (1 - p) * (N + 1 - n)


@dataclass(frozen=True)
class Meixner(Family):
    beta: object
    c: object

    name = "meixner"

    def _validate(self):
        if self.c == 1:
            raise DegenerateParameters("Meixner requires c ≠ 1", factor="c-1")

    def _terms(self, n):
        be, c = self.beta, self.c
        for k in range(n + 1):
            yield (pochhammer(-n, k) * pochhammer(be + k, n - k) * c ** (n - k)
                   / ((c - 1) ** (n - k) * pochhammer(1, k)))

    def basis(self, j):
        return Poly([j, -1])

    def _recurrence(self, n):
        be, c = self.beta, self.c
        return (n + c * (n + be)) / (1 - c), n * c * (n + be - 1) / (c - 1) ** 2


FAMILIES = {cls.name: cls for cls in
            (Hahn, ContinuousHahn, Wilson, Racah, DualHahn, ContinuousDualHahn, Krawtchouk, Meixner)}


def family_from_name(name: str, **params) -> Family:
    key = name.lower().replace("-", "_")
    if key not in FAMILIES:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[key](**params)


# -- construction ---------------------------------------------------------------

def hypergeometric_build(spec: Family, n: int) -> Poly:
    """Monic degree-``n`` polynomial from the reduced hypergeometric sum."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return _sum_terms(spec, n, spec.basis)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    beta_n: object
    gamma_n: object
    n: int


def recurrence_coefficients(spec: Family, n: int) -> RecurrenceCoefficients:
    """Monic three-term recurrence ``v p_n = p_{n+1} + beta_n p_n + gamma_n p_{n-1}``."""
    b, g = spec._recurrence(n)
    return RecurrenceCoefficients(as_exact(b) if is_exact(b) else b,
                                  as_exact(g) if is_exact(g) else g, n)


def ttrr_build(spec: Family, n: int) -> Poly:
    """Monic degree-``n`` polynomial by iterating the recurrence from p_0 = 1."""
    v = spec.variable_poly()
    prev = Poly([], spec.var, spec.lattice)
    cur = Poly([1], spec.var, spec.lattice)
    for k in range(n):
        rc = recurrence_coefficients(spec, k)
        prev, cur = cur, v * cur - cur * rc.beta_n - prev * rc.gamma_n
    return cur


def build_sequence(spec: Family, nmax: int) -> list[Poly]:
    return [hypergeometric_build(spec, n) for n in range(nmax + 1)]


# -- relations between families ----------------------------------------------------

@dataclass(frozen=True)
class Transform:
    """``source(v) = prefactor * counterpart(u*v + shift)``."""

    u: object
    shift: object
    prefactor: object

    def apply(self, counterpart: Poly, var: str = "x", lattice=None) -> Poly:
        mapped = counterpart.compose(Poly([self.shift, self.u], var, lattice))
        return Poly((mapped * self.prefactor).coeffs, var, lattice)


def relate(spec: Family, n: int) -> tuple[Family, Transform]:
    """Counterpart family and the map carrying its degree-``n`` polynomial to ``spec``'s."""
    if isinstance(spec, Hahn):
        cp = ContinuousHahn(0, spec.beta + spec.N + 1, -spec.N, spec.alpha + 1)
        return cp, Transform(I, 0, (-I) ** n)
    if isinstance(spec, ContinuousHahn):
        N = -(spec.a + spec.c)
        if isinstance(N, GaussianRational) or N.denominator != 1:
            raise NoCounterpart("continuous Hahn maps to Hahn only when -a-c is an integer")
        cp = Hahn(spec.a + spec.d - 1, spec.b + spec.c - 1, int(N))
        return cp, Transform(-I, -spec.a, I ** n)
    if isinstance(spec, Racah):
        s = spec.shift
        cp = Wilson(s / 2, spec.alpha - (spec.gamma + spec.delta - 1) / 2,
                    spec.beta + (-spec.gamma + spec.delta + 1) / 2,
                    (spec.gamma - spec.delta + 1) / 2)
        return cp, Transform(-1, -s * s / 4, (-1) ** n)
    if isinstance(spec, Wilson):
        a = spec.a
        cp = Racah(a + spec.b - 1, spec.c + spec.d - 1, a + spec.d - 1, a - spec.d, branch=None)
        return cp, Transform(-1, -a * a, (-1) ** n)
    if isinstance(spec, DualHahn):
        s = spec.shift
        cp = ContinuousDualHahn(s / 2, (spec.gamma - spec.delta + 1) / 2, -spec.N - s / 2)
        return cp, Transform(-1, -s * s / 4, (-1) ** n)
    if isinstance(spec, ContinuousDualHahn):
        a = spec.a
        N = -(a + spec.c)
        if isinstance(N, GaussianRational) or N.denominator != 1:
            raise NoCounterpart("continuous dual Hahn maps to dual Hahn only when -a-c is an integer")
        cp = DualHahn(a + spec.b - 1, a - spec.b, int(N))
        return cp, Transform(-1, -a * a, (-1) ** n)
    if isinstance(spec, Krawtchouk):
        return Meixner(-spec.N, spec.p / (spec.p - 1)), Transform(1, 0, 1)
    if isinstance(spec, Meixner):
        N = -spec.beta
        if isinstance(N, GaussianRational) or N.denominator != 1:
            raise NoCounterpart("Meixner maps to Krawtchouk only when -β is an integer")
        if spec.c == 0:
            raise NoCounterpart("Meixner with c = 0 has no Krawtchouk counterpart")
        return Krawtchouk(spec.c / (spec.c - 1), int(N)), Transform(1, 0, 1)
    raise NoCounterpart(f"no counterpart for {spec!r}")


# -- weights -------------------------------------------------------------------------

def _weight_value(spec: Family, x: int):
    if isinstance(spec, Hahn):
        a, b, N = spec.alpha, spec.beta, spec.N
        return pochhammer(a + 1, x) * pochhammer(b + 1, N - x) / (
            pochhammer(1, x) * pochhammer(1, N - x))
    if isinstance(spec, Krawtchouk):
        p, N = spec.p, spec.N
        return p ** x * (1 - p) ** (N - x) / (pochhammer(1, x) * pochhammer(1, N - x))
    if isinstance(spec, DualHahn):
        ga, de, N = spec.gamma, spec.delta, spec.N
        s = spec.shift
        den = (-1) ** x * _poch_den(x + s, N + 1, "x+γ+δ+1") * _poch_den(de + 1, x, "δ+1") \
            * pochhammer(1, x)
        return (2 * x + s) * pochhammer(ga + 1, x) * pochhammer(-N, x) / den
    if isinstance(spec, Racah):
        al, be, ga, de = spec.alpha, spec.beta, spec.gamma, spec.delta
        s = spec.shift
        num = (pochhammer(al + 1, x) * pochhammer(be + de + 1, x) * pochhammer(ga + 1, x)
               * pochhammer(s, x) * pochhammer((s + 2) / 2, x))
        den = (_poch_den(-al + s, x, "-α+γ+δ+1") * _poch_den(-be + ga + 1, x, "-β+γ+1")
               * _poch_den(s / 2, x, "(γ+δ+1)/2") * _poch_den(de + 1, x, "δ+1")
               * pochhammer(1, x))
        return num / den
    if isinstance(spec, Meixner):
        return pochhammer(spec.beta, x) * spec.c ** x / pochhammer(1, x)
    raise OutOfSupport(f"{spec.name} has no discrete weight")


def discrete_weight(spec: Family, x: int):
    """Pochhammer-normalized discrete weight at the mass point ``x``.

    Hahn drops the constant Γ(α+1)Γ(β+1) (see :func:`weight_normalization`).
    """
    if isinstance(spec, Meixner):
        if x < 0:
            raise OutOfSupport(f"x={x} outside the support [0, ∞)")
        return as_exact(_weight_value(spec, x))
    if not spec.finite:
        raise OutOfSupport(f"{spec.name} has no discrete weight")
    if x < 0 or x > spec.N:
        raise OutOfSupport(f"x={x} outside the support [0, {spec.N}]")
    return as_exact(_weight_value(spec, x))


def discrete_weight_extended(spec: Hahn, x: int):
    """Zero-extended Hahn weight: 0 at integers off ``[0, N]``."""
    if x < 0 or x > spec.N:
        return Fraction(0)
    return discrete_weight(spec, x)


def weight_normalization(spec: Family) -> str:
    """Human-readable constant dropped by the Pochhammer normalization."""
    if isinstance(spec, Hahn):
        return f"Gamma({spec.alpha + 1})*Gamma({spec.beta + 1})"
    if isinstance(spec, DualHahn):
        return f"1/{spec.N}!"
    return "1"


# -- continuous weights -----------------------------------------------------------

def _near_nonpositive_integer(z, tol=1e-12):
    z = np.asarray(z, dtype=complex)
    r = np.round(z.real)
    return (r <= 0) & (np.abs(z.real - r) <= tol) & (np.abs(z.imag) <= tol)


@dataclass(frozen=True)
class ContourWeight:
    """Gamma-product weight on vertical lines ``Re z = σ``.

    ``numerator(z)`` and ``denominator(z)`` are lists of Gamma arguments as
    affine maps ``(slope, offset)``; ``power`` is the base of an ``(·)^z``
    factor.  ``argument`` maps the contour variable to the polynomial
    variable: ``("affine", u, v)`` evaluates at ``u z + v``; ``("lattice", s)``
    evaluates a lambda-polynomial at ``z (z + s)``; ``("square",)`` at ``z**2``.
    """

    kind: str
    params: tuple
    numerator: tuple
    denominator: tuple = ()
    power: object = None
    argument: tuple = ("affine", 1, 0)

    def gamma_args(self, z, which="numerator"):
        z = np.asarray(z, dtype=complex)
        return [complex(to_complex(s)) * z + complex(to_complex(o))
                for s, o in getattr(self, which)]

    def log(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for arg in self.gamma_args(z):
            if np.any(_near_nonpositive_integer(arg)):
                raise PoleHit(f"{self.kind} weight evaluated at a Gamma pole")
            out = out + kernels.loggamma(arg)
        for arg in self.gamma_args(z, "denominator"):
            vals = kernels.loggamma(arg)
            vals = np.where(_near_nonpositive_integer(arg), np.inf + 0j, vals)
            out = out - vals
        if self.power is not None:
            out = out + z * np.log(complex(to_complex(self.power)))
        return out

    def __call__(self, z):
        return np.exp(self.log(z))

    def poles(self):
        """Starts of the increasing and decreasing pole sequences (as complex)."""
        inc, dec = [], []
        for s, o in self.numerator:
            s_c, o_c = complex(to_complex(s)), complex(to_complex(o))
            if s_c.real < 0:  # Gamma(o - z): poles at z = o + k
                inc.append(o_c / -s_c)
            else:  # Gamma(o + z): poles at z = -o - k
                dec.append(-o_c / s_c)
        return inc, dec

    def eval_poly(self, poly: Poly, z):
        coeffs = poly.to_array()
        z = np.asarray(z, dtype=complex)
        tag = self.argument[0]
        if tag == "affine":
            u, v = (complex(to_complex(t)) for t in self.argument[1:])
            w = u * z + v
        elif tag == "lattice":
            s = complex(to_complex(self.argument[1]))
            w = z * (z + s)
        elif tag == "square":
            w = z * z
        else:
            raise ValueError(f"unknown polynomial argument {tag!r}")
        if coeffs.size == 0:
            return np.zeros(z.shape, dtype=complex)
        return kernels.horner(coeffs, w)


def hahn_sobolev_weight(alpha, beta, N) -> ContourWeight:
    """Γ(-z)Γ(β+N+1-z)Γ(1+z)Γ(α+N+2+z)."""
    alpha, beta = as_exact(alpha), as_exact(beta)
    return ContourWeight("hahn_sobolev", (alpha, beta, N),
                         ((-1, 0), (-1, beta + N + 1), (1, 1), (1, alpha + N + 2)))


def continuous_hahn_weight(a, b, c, d) -> ContourWeight:
    """Γ(a+ix)Γ(b+ix)Γ(c-ix)Γ(d-ix) written in z = ix; polynomials see x = -iz."""
    a, b, c, d = (as_exact(t) for t in (a, b, c, d))
    return ContourWeight("continuous_hahn", (a, b, c, d),
                         ((1, a), (1, b), (-1, c), (-1, d)), argument=("affine", -I, 0))


def meixner_weight(beta, c) -> ContourWeight:
    """Γ(-z)Γ(β+z)(-c)^z."""
    beta, c = as_exact(beta), as_exact(c)
    return ContourWeight("meixner", (beta, c), ((-1, 0), (1, beta)), power=-c)


def krawtchouk_sobolev_weight(p) -> ContourWeight:
    """Γ(-z)Γ(1+z)(p/(1-p))^z."""
    p = as_exact(p)
    return ContourWeight("krawtchouk_sobolev", (p,), ((-1, 0), (1, 1)), power=p / (1 - p))


def _wilson_type_weight(kind, params, a, others, branch, argument, lattice_shift):
    """ν(w)ν(-w) with w = i(z+a): Gamma(a_j + iw) = Gamma(a_j - a - z) etc.

    ``branch`` picks the denominator: ``"gamma_2iw"`` divides by Γ(2iw)Γ(-2iw)
    (the Wilson form), ``"gamma_2w"`` by Γ(2w)Γ(-2w).
    """
    numer = [(-1, 0), (1, 2 * a)]
    for b in others:
        numer += [(-1, b - a), (1, b + a)]
    if branch == "gamma_2iw":
        denom = [(-2, -2 * a), (2, 2 * a)]
    elif branch == "gamma_2w":
        denom = [(2 * I, 2 * I * a), (-2 * I, -2 * I * a)]
    else:
        raise ValueError(f"unknown weight branch {branch!r}")
    arg = ("lattice", lattice_shift) if argument == "lattice" else ("square",)
    return ContourWeight(kind, params + (branch, argument), tuple(numer), tuple(denom),
                         argument=arg)


def racah_sobolev_weight(spec: Racah, branch="gamma_2iw", argument="lattice") -> ContourWeight:
    if spec.branch != "alpha":
        raise DegenerateParameters("the Racah Sobolev product is stated for α+1 = -N",
                                   factor="branch")
    ga, de, be, N = spec.gamma, spec.delta, spec.beta, spec.N
    a = 1 + (ga + de + N) / 2
    b = -(ga + de + N) / 2
    c = be + 1 + (-ga + de + N) / 2
    d = 1 + (ga - de + N) / 2
    return _wilson_type_weight("racah_sobolev", (spec.alpha, be, ga, de, N), a, (b, c, d),
                               branch, argument, 2 * a)


def dual_hahn_sobolev_weight(spec: DualHahn, branch="gamma_2iw",
                             argument="lattice") -> ContourWeight:
    ga, de, N = spec.gamma, spec.delta, spec.N
    a = 1 + (ga + de + N) / 2
    b = 1 + (ga - de + N) / 2
    c = -(ga + de + N) / 2
    return _wilson_type_weight("dual_hahn_sobolev", (ga, de, N), a, (b, c),
                               branch, argument, 2 * a)


def continuous_log_weight(weight: ContourWeight, z):
    """Log of the contour weight at ``z`` (principal Gamma branches, via Lanczos)."""
    return weight.log(z)


def sobolev_weight(spec: Family, **options) -> ContourWeight:
    if isinstance(spec, Hahn):
        return hahn_sobolev_weight(spec.alpha, spec.beta, spec.N)
    if isinstance(spec, Krawtchouk):
        return krawtchouk_sobolev_weight(spec.p)
    if isinstance(spec, Racah):
        return racah_sobolev_weight(spec, **options)
    if isinstance(spec, DualHahn):
        return dual_hahn_sobolev_weight(spec, **options)
    raise DegenerateParameters(f"{spec.name} has no Δ-Sobolev product", factor="family")
