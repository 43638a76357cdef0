"""Exact scalars, dense univariate polynomials and difference operators.

Two arithmetic modes coexist.  Exact values are :class:`fractions.Fraction`
(real rationals) or :class:`GaussianRational` (rational real and imaginary
parts); float values are Python ``complex``.  A :class:`Poly` stores whatever
scalars it is given and normalizes Gaussian rationals with zero imaginary
part back to ``Fraction`` so that real computations stay on the fast path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import ExactDivisionFailed, ZeroLatticeStep

__all__ = [
    "GaussianRational",
    "I",
    "Lattice",
    "Poly",
    "X",
    "affine_substitute",
    "as_exact",
    "delta_pow",
    "is_exact",
    "lattice_divided_difference",
    "nabla_pow",
    "parse_scalar",
    "pochhammer",
    "poly_eval",
    "to_complex",
]


class GaussianRational:
    """Complex number with arbitrary-precision rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else complex(self) + other
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else complex(self) - other
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else other - complex(self)
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else complex(self) * other
        if o.im == 0:
            return GaussianRational(self.re * o.re, self.im * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else complex(self) / other
        if o.im == 0:
            if o.re == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(self.re / o.re, self.im / o.re)
        d = o.re * o.re + o.im * o.im
        return GaussianRational((self.re * o.re + self.im * o.im) / d,
                                (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, complex) else other / complex(self)
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{abs(self.im)}i"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussianRational(0, 1)


def is_exact(value) -> bool:
    return isinstance(value, (int, Rational, GaussianRational))


def as_exact(value):
    """Return ``value`` as Fraction, or GaussianRational when genuinely complex."""
    if isinstance(value, GaussianRational):
        return value.re if value.im == 0 else value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


_COMPLEX_RE = re.compile(r"^\s*([+-]?[^+-]*?)\s*([+-])\s*([^+-]*)i\s*$")


def parse_scalar(text: str):
    """Parse ``"p/q"``, ``"1.25"``, ``"1e3"``, ``"3i"`` or ``"1/2+3/4i"`` exactly."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if s.endswith("i") or s.endswith("j"):
        s = s[:-1] + "i"
        m = _COMPLEX_RE.match(s)
        if m and m.group(1) not in ("", "+", "-"):
            re_part = Fraction(m.group(1))
            im_text = m.group(3) or "1"
            im_part = Fraction(im_text) * (-1 if m.group(2) == "-" else 1)
        else:
            body = s[:-1]
            if body in ("", "+"):
                body = "1"
            elif body == "-":
                body = "-1"
            re_part, im_part = Fraction(0), Fraction(body)
        return as_exact(GaussianRational(re_part, im_part))
    return Fraction(s)


def format_scalar(value) -> str:
    """Canonical string for an exact scalar; inverse of :func:`parse_scalar`."""
    value = as_exact(value)
    return str(value)


def to_complex(value) -> complex:
    return complex(value) if not isinstance(value, Fraction) else complex(float(value))


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n``; exact for exact ``a``."""
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    result = Fraction(1) if is_exact(a) else 1.0
    for j in range(n):
        result = result * (a + j)
    return result


def _normalize(c):
    if isinstance(c, GaussianRational) and c.im == 0:
        return c.re
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


@dataclass(frozen=True)
class Lattice:
    """Lattice variable ``lambda(x) = x (x + shift)``; ``shift=None`` means linear."""

    shift: object = None

    @property
    def kind(self):
        return "linear" if self.shift is None else "quadratic"

    @classmethod
    def linear(cls):
        return cls(None)

    @classmethod
    def quadratic(cls, shift):
        return cls(_normalize(shift))

    def as_poly(self) -> "Poly":
        if self.shift is None:
            return X
        return Poly([0, self.shift, 1])

    def step(self) -> "Poly":
        """``lambda(x+1) - lambda(x)`` as a polynomial in x."""
        if self.shift is None:
            return Poly([1])
        return Poly([1 + self.shift, 2])

    def shifted(self, k: int) -> "Lattice":
        """Lattice reached after ``k`` divided-difference applications."""
        if self.shift is None:
            return self
        return Lattice(_normalize(self.shift + k))


class Poly:
    """Dense univariate polynomial, coefficients low to high degree.

    ``var`` is ``"x"`` or ``"lambda"``; a lambda-polynomial may carry the
    :class:`Lattice` it lives on.
    """

    __slots__ = ("coeffs", "var", "lattice")

    def __init__(self, coeffs: Iterable = (), var: str = "x", lattice: Lattice | None = None):
        cs = [_normalize(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.lattice = lattice

    # construction helpers
    @classmethod
    def constant(cls, c, var="x", lattice=None):
        return cls([c], var, lattice)

    @classmethod
    def monomial(cls, k: int, var="x", lattice=None):
        return cls([0] * k + [1], var, lattice)

    @classmethod
    def from_roots(cls, roots: Iterable, var="x"):
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    def with_var(self, var: str, lattice: Lattice | None = None) -> "Poly":
        return Poly(self.coeffs, var, lattice)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self, tol: float = 1e-12) -> bool:
        if not self.coeffs:
            return False
        lc = self.coeffs[-1]
        if is_exact(lc):
            return lc == 1
        return abs(lc - 1) <= tol

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def is_real(self) -> bool:
        return all(not isinstance(c, (GaussianRational, complex)) for c in self.coeffs)

    # ring operations
    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var, self.lattice)

    def _var_for(self, other: "Poly"):
        if other.degree <= 0:
            return self.var, self.lattice
        if self.degree <= 0:
            return other.var, other.lattice
        if self.var != other.var:
            raise ValueError(f"mixing polynomials in {self.var!r} and {other.var!r}")
        return self.var, self.lattice if self.lattice is not None else other.lattice

    def __add__(self, other):
        other = self._lift(other)
        var, lat = self._var_for(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)], var, lat)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var, self.lattice)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.var, self.lattice)
        var, lat = self._var_for(other)
        if not self.coeffs or not other.coeffs:
            return Poly([], var, lat)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, var, lat)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Poly):
            raise TypeError("use divmod for polynomial division")
        return Poly([c / scalar for c in self.coeffs], self.var, self.lattice)

    def __pow__(self, n: int):
        result = Poly([1], self.var, self.lattice)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return self.coeffs == Poly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, z):
        return poly_eval(self, z)

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lc = other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return Poly(quot, self.var, self.lattice), Poly(rem[:dq], self.var, self.lattice)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ExactDivisionFailed(f"nonzero remainder {r.coeffs} dividing by {other.coeffs}")
        return q

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(t))``; the result lives in ``inner``'s variable."""
        result = Poly([], inner.var, inner.lattice)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return Poly(result.coeffs, inner.var, inner.lattice)

    def to_array(self) -> np.ndarray:
        return np.array([to_complex(c) for c in self.coeffs], dtype=complex)

    def max_abs_diff(self, other: "Poly") -> float:
        n = max(len(self.coeffs), len(other.coeffs))
        if n == 0:
            return 0.0
        return max(abs(to_complex(self.coeff(k) - other.coeff(k))) for k in range(n))

    def at_x(self) -> "Poly":
        """Expand a lambda-polynomial into a polynomial in x via its lattice."""
        if self.var == "x":
            return self
        if self.lattice is None:
            raise ValueError("lambda-polynomial without a lattice cannot be expanded")
        return Poly(self.compose(self.lattice.as_poly()).coeffs, "x")

    def __repr__(self):
        lat = "" if self.lattice is None else f", lattice={self.lattice!r}"
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r}{lat})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        name = "x" if self.var == "x" else "λ"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            terms.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(terms)


X = Poly([0, 1])


def poly_eval(p: Poly, z):
    """Horner evaluation; exact whenever ``p`` and ``z`` are exact."""
    acc = Fraction(0) if is_exact(z) else 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return _normalize(acc) if is_exact(acc) else acc


def affine_substitute(p: Poly, u, v) -> Poly:
    """Return ``p(u x + v)``."""
    return p.compose(Poly([v, u], p.var, p.lattice))


def _forward(p: Poly) -> Poly:
    return affine_substitute(p, 1, 1) - p


def delta_pow(p: Poly, k: int) -> Poly:
    """k-fold forward difference ``Δ^k p``."""
    if p.var != "x":
        raise ValueError("forward differences act on polynomials in x")
    for _ in range(k):
        if p.is_zero():
            break
        p = _forward(p)
    return p


def nabla_pow(p: Poly, k: int) -> Poly:
    """k-fold backward difference ``∇^k p``."""
    if p.var != "x":
        raise ValueError("backward differences act on polynomials in x")
    for _ in range(k):
        if p.is_zero():
            break
        p = p - affine_substitute(p, 1, -1)
    return p


def _x_to_lambda(q: Poly, shift) -> Poly:
    """Re-express a polynomial in x symmetric about ``-shift/2`` in ``x(x+shift)``."""
    half = Fraction(shift) / 2 if not isinstance(shift, GaussianRational) else shift / 2
    centered = affine_substitute(q, 1, -half)
    odd = [c for k, c in enumerate(centered.coeffs) if k % 2 == 1 and c]
    if odd:
        raise ExactDivisionFailed(
            f"polynomial is not symmetric about {-half}; not a polynomial on the lattice")
    in_square = Poly(centered.coeffs[::2], "lambda")
    # y^2 = lambda + shift^2/4
    return Poly(affine_substitute(in_square, 1, half * half).coeffs, "lambda", Lattice.quadratic(shift))


def lattice_divided_difference(p: Poly, lat: Lattice, k: int) -> Poly:
    """Apply ``(Δ/Δλ)^k`` to a polynomial in the lattice variable.

    Each application moves the lattice from ``x(x+s)`` to ``x(x+s+1)``;
    the returned polynomial carries its final lattice.
    """
    if lat.shift is None:
        out = delta_pow(Poly(p.coeffs, "x"), k)
        return Poly(out.coeffs, "lambda", lat)
    current = lat
    q = Poly(p.coeffs, "lambda", lat)
    for _ in range(k):
        step = current.step()
        if step.is_zero():
            raise ZeroLatticeStep("lattice step λ(x+1)-λ(x) vanishes identically")
        if q.degree <= 0:
            return Poly([], "lambda", lat.shifted(k))
        in_x = Poly(q.compose(current.as_poly()).coeffs, "x")
        quotient = _forward(in_x).exact_div(step)
        current = current.shifted(1)
        q = _x_to_lambda(quotient, current.shift)
    return Poly(q.coeffs, "lambda", current)
