from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opoly import kernels, _pykernels
from opoly.algebra import (
    GaussianRational, I, Lattice, Poly, affine_substitute, as_exact, delta_pow, format_scalar,
    lattice_divided_difference, nabla_pow, parse_scalar, pochhammer,
)
from opoly.errors import ExactDivisionFailed

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(fractions, min_size=0, max_size=7).map(Poly)


@pytest.mark.parametrize("text, value", [
    ("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), ("1.25", Fraction(5, 4)),
    ("1e3", Fraction(1000)), ("1e-2", Fraction(1, 100)), ("3i", GaussianRational(0, 3)),
    ("-i", GaussianRational(0, -1)), ("1/2+3/4i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
    ("1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))), ("2+0i", Fraction(2)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1//2"])
def test_parse_scalar_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


@given(fractions, fractions)
def test_format_round_trip(re, im):
    v = as_exact(GaussianRational(re, im))
    assert parse_scalar(format_scalar(v)) == v


@given(fractions, fractions, fractions, fractions)
def test_gaussian_field_ops(a, b, c, d):
    z, w = GaussianRational(a, b), GaussianRational(c, d)
    assert z * w == w * z
    assert (z + w) - w == z
    if w:
        assert (z / w) * w == z
    assert complex(z * w) == pytest.approx(complex(z) * complex(w))


def test_i_squared():
    assert I * I == -1
    assert as_exact(I * I) == Fraction(-1)
    assert isinstance(as_exact(I * I), Fraction)


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(1, 2) * Fraction(3, 2) * Fraction(5, 2)
    assert pochhammer(-3, 5) == 0
    assert pochhammer(7, 0) == 1
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(polys, polys)
def test_mul_degree_and_divmod(p, q):
    prod = p * q
    if p.is_zero() or q.is_zero():
        assert prod.is_zero()
        return
    assert prod.degree == p.degree + q.degree
    assert prod.exact_div(q) == p


def test_exact_div_rejects_remainder():
    with pytest.raises(ExactDivisionFailed):
        Poly([1, 0, 1]).exact_div(Poly([-1, 1]))


@given(polys, fractions, fractions)
def test_affine_substitute_matches_evaluation(p, u, v):
    q = affine_substitute(p, u, v)
    for x in (Fraction(0), Fraction(2, 3), Fraction(-5)):
        assert q(x) == p(u * x + v)


@given(polys, st.integers(0, 8))
def test_delta_and_nabla(p, k):
    d = delta_pow(p, k)
    # pointwise finite-difference oracle
    from math import comb
    for x in (Fraction(0), Fraction(3, 2)):
        assert d(x) == sum((-1) ** (k - j) * comb(k, j) * p(x + j) for j in range(k + 1))
    assert nabla_pow(p, k) == affine_substitute(d, 1, -k)


def test_delta_lowers_degree():
    p = Poly([3, 0, 0, 0, 2])
    assert delta_pow(p, 1).degree == 3
    assert delta_pow(p, 5).is_zero()


@pytest.mark.parametrize("shift", [Fraction(3), Fraction(5, 2), Fraction(-1, 3)])
def test_lattice_divided_difference(shift):
    lat = Lattice.quadratic(shift)
    p = Poly([Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(1)], "lambda", lat)
    q = lattice_divided_difference(p, lat, 1)
    assert q.degree == 2
    assert q.lattice == lat.shifted(1)
    # pointwise definition: (p(λ(x+1)) - p(λ(x))) / (λ(x+1) - λ(x))
    lam = lambda x, s: x * (x + s)
    for x in (Fraction(0), Fraction(1, 2), Fraction(4)):
        num = p(lam(x + 1, shift)) - p(lam(x, shift))
        den = lam(x + 1, shift) - lam(x, shift)
        assert q(lam(x, shift + 1)) == num / den


def test_linear_lattice_divided_difference_is_delta():
    p = Poly([1, 2, 3, 4])
    assert lattice_divided_difference(p, Lattice.linear(), 2).coeffs == delta_pow(p, 2).coeffs


def test_at_x_expands_lambda():
    lat = Lattice.quadratic(Fraction(2))
    p = Poly([0, 1], "lambda", lat)
    assert p.at_x() == Poly([0, 2, 1])


# -- kernels ----------------------------------------------------------------------

scipy_special = pytest.importorskip("scipy.special")


@pytest.mark.parametrize("impl", [_pykernels, kernels], ids=["python", "dispatch"])
def test_loggamma_against_scipy(impl):
    rng = np.random.default_rng(1)
    z = rng.uniform(-25, 25, 4000) + 1j * rng.uniform(-20, 20, 4000)
    ref = scipy_special.loggamma(z)
    got = impl.loggamma(z)
    # compare Gamma itself through exp of the difference, so branches of log do not matter
    err = np.abs(np.exp(1j * (got.imag - ref.imag)) - 1) + np.abs(got.real - ref.real)
    assert np.max(err / np.maximum(1, np.abs(ref))) < 1e-13


def test_loggamma_far_from_axis():
    z = np.array([0.5 + 45j, -3.3 - 60j, 10 + 80j])
    ref = scipy_special.loggamma(z)
    got = kernels.loggamma(z)
    assert np.max(np.abs(got.real - ref.real) / np.abs(ref)) < 1e-12


def test_kernel_backends_agree():
    rng = np.random.default_rng(2)
    coeffs = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    z = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    np.testing.assert_allclose(kernels.horner(coeffs, z), _pykernels.horner(coeffs, z),
                               rtol=1e-13)
    np.testing.assert_allclose(kernels.horner(coeffs, z), np.polyval(coeffs[::-1], z),
                               rtol=1e-12)


def test_aberth_finds_known_roots():
    target = np.array([1, -2, 0.5 + 1j, 0.5 - 1j, 3j])
    coeffs = np.poly(target)[::-1].astype(complex)
    z0 = 4 * np.exp(1j * (2 * np.pi * np.arange(5) / 5 + 0.4))
    for impl in (kernels, _pykernels):
        z, its, ok = impl.aberth(coeffs, z0, 200)
        assert ok
        for r in target:
            assert np.min(np.abs(z - r)) < 1e-12
