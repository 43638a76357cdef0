import cmath
import math
import random
from fractions import Fraction

import pytest

from conftest import FAMILY_NAMES, admissible_draw
from oracles import falling_product, gram_schmidt_monic
from opoly.algebra import GaussianRational, Poly, as_exact
from opoly.errors import DegenerateParameters, NoCounterpart, PoleHit
from opoly.families import (
    ContinuousDualHahn, ContinuousHahn, DualHahn, Hahn, Krawtchouk, Meixner, Racah, Wilson,
    discrete_weight, family_from_name, hahn_sobolev_weight, hypergeometric_build,
    meixner_weight, recurrence_coefficients, relate, ttrr_build,
)

F = Fraction


def test_degree_zero_is_one():
    for spec in (Hahn(1, 1, 5), Krawtchouk(F(1, 3), 2), Meixner(2, F(-1, 2)), DualHahn(1, 2, 3)):
        assert hypergeometric_build(spec, 0) == Poly([1])
        assert ttrr_build(spec, 0) == Poly([1])


def test_hahn_low_degrees():
    spec = Hahn(1, 1, 5)
    assert hypergeometric_build(spec, 1).coeffs == (F(-5, 2), F(1))
    assert hypergeometric_build(spec, 2).coeffs == (F(4), F(-5), F(1))
    assert ttrr_build(spec, 2).coeffs == (F(4), F(-5), F(1))


@pytest.mark.parametrize("alpha, beta, N", [(1, 1, 5), (F(1, 2), F(3, 2), 3), (2, 7, 4)])
def test_hahn_matches_classical_orthogonalization(alpha, beta, N):
    # for n <= N the construction must agree with Gram-Schmidt on the classical weight
    spec = Hahn(alpha, beta, N)
    weights = [discrete_weight(spec, x) for x in range(N + 1)]
    ref = gram_schmidt_monic(list(range(N + 1)), weights, N)
    for n in range(N + 1):
        assert list(hypergeometric_build(spec, n).coeffs) == ref[n]


def test_krawtchouk_matches_classical_orthogonalization():
    spec = Krawtchouk(F(1, 3), 4)
    weights = [discrete_weight(spec, x) for x in range(5)]
    ref = gram_schmidt_monic(list(range(5)), weights, 4)
    for n in range(5):
        assert list(hypergeometric_build(spec, n).coeffs) == ref[n]


def test_dual_hahn_matches_classical_orthogonalization():
    spec = DualHahn(F(1, 2), F(2, 3), 3)
    lam = [x * (x + spec.shift) for x in range(4)]
    weights = [discrete_weight(spec, x) for x in range(4)]
    ref = gram_schmidt_monic(lam, weights, 3)
    for n in range(4):
        assert list(hypergeometric_build(spec, n).coeffs) == ref[n]


def test_krawtchouk_degree_one():
    p = F(2, 7)
    assert hypergeometric_build(Krawtchouk(p, 4), 1).coeffs == (-4 * p, F(1))


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_path_equality(name):
    rng = random.Random(FAMILY_NAMES.index(name))
    for _ in range(6):
        spec = admissible_draw(name, rng, nmax=10)
        for n in range(11):
            assert ttrr_build(spec, n) == hypergeometric_build(spec, n), (spec, n)


@pytest.mark.parametrize("spec", [Hahn(1, 1, 5), Hahn(F(-7, 3), F(5, 2), 2), Krawtchouk(F(3, 5), 3),
                                  DualHahn(F(1, 3), F(2, 5), 3),
                                  Racah(-4, F(1, 2), F(1, 3), F(1, 5)),
                                  Racah(F(2, 3), F(-9, 2), F(1, 3), F(1, 2), branch="beta_delta"),
                                  Racah(F(1, 2), F(1, 3), -3, F(2, 7), branch="gamma")])
def test_degree_N_plus_1_is_mass_product(spec):
    N = spec.N
    p = hypergeometric_build(spec, N + 1)
    if spec.var == "lambda":
        pts = [x * (x + spec.shift) for x in range(N + 1)]
        assert list(p.coeffs) == falling_product(N, pts)
    else:
        assert list(p.coeffs) == falling_product(N)


def test_hahn_N1_degree_two():
    for a, b in [(1, 1), (F(2, 3), F(-1, 5)), (7, 0)]:
        assert hypergeometric_build(Hahn(a, b, 1), 2).coeffs == (0, -1, 1)


def test_hahn_recurrence_values():
    rc = recurrence_coefficients(Hahn(1, 1, 5), 1)
    assert (rc.beta_n, rc.gamma_n) == (F(5, 2), F(9, 4))


def test_cutoff_gamma_vanishes():
    rng = random.Random(7)
    for _ in range(20):
        N = rng.randint(0, 6)
        spec = Hahn(F(rng.randint(1, 30), rng.randint(1, 5)), F(rng.randint(1, 30), rng.randint(1, 5)), N)
        assert recurrence_coefficients(spec, N + 1).gamma_n == 0
        for n in range(1, 2 * N + 5):
            if n != N + 1:
                assert recurrence_coefficients(spec, n).gamma_n != 0


def test_meixner_recurrence_formula():
    be, c = F(3, 2), F(-1, 2)
    for n in range(6):
        rc = recurrence_coefficients(Meixner(be, c), n)
        assert rc.beta_n == (n + c * (n + be)) / (1 - c)
        assert rc.gamma_n == n * c * (n + be - 1) / (c - 1) ** 2


def _same_after_transform(spec, n):
    cp, tr = relate(spec, n)
    lhs = hypergeometric_build(spec, n)
    rhs = tr.apply(hypergeometric_build(cp, n), spec.var, spec.lattice)
    return lhs == rhs


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_relate_soundness(name):
    rng = random.Random(31 + len(name))
    checked = 0
    while checked < 4:
        spec = admissible_draw(name, rng, nmax=6)
        try:
            for n in range(7):
                assert _same_after_transform(spec, n), (spec, n)
        except (NoCounterpart, DegenerateParameters):
            continue
        checked += 1


def test_relate_examples():
    cp, tr = relate(Krawtchouk(F(1, 2), 4), 1)
    assert cp == Meixner(-4, -1)
    assert tr.u == 1 and tr.shift == 0
    assert hypergeometric_build(Krawtchouk(F(1, 2), 4), 1).coeffs == (F(-2), F(1))
    cp, _ = relate(Hahn(F(1, 2), 3, 4), 2)
    assert cp == ContinuousHahn(0, 8, -4, F(3, 2))


def test_relate_needs_integer_N():
    with pytest.raises(NoCounterpart):
        relate(ContinuousHahn(F(1, 2), 1, F(1, 3), 2), 1)
    with pytest.raises(NoCounterpart):
        relate(Meixner(F(3, 2), F(-1, 2)), 1)


def test_degenerate_parameters_name_the_factor():
    with pytest.raises(DegenerateParameters) as info:
        hypergeometric_build(Hahn(-1, -1, 3), 1)
    assert info.value.factor
    with pytest.raises(DegenerateParameters):
        Krawtchouk(1, 3)
    with pytest.raises(DegenerateParameters):
        Meixner(1, 1)
    with pytest.raises(DegenerateParameters):
        Racah(F(1, 2), 1, 1, 1)  # alpha branch without alpha + 1 = -N


def test_family_from_name():
    assert family_from_name("dual-hahn", gamma=1, delta=2, N=3) == DualHahn(1, 2, 3)
    with pytest.raises(KeyError):
        family_from_name("jacobi")


def test_discrete_weight_values():
    assert discrete_weight(Hahn(1, 1, 1), 0) == 2
    assert discrete_weight(Krawtchouk(F(1, 2), 2), 1) == F(1, 4)


@pytest.mark.parametrize("spec", [Hahn(1, 1, 5), Hahn(F(1, 2), F(3, 2), 3), Krawtchouk(F(1, 3), 4)])
def test_classical_orthogonality_exact(spec):
    N = spec.N
    for n in range(1, N + 1):
        p = hypergeometric_build(spec, n)
        for m in range(n):
            total = sum(discrete_weight(spec, x) * p(x) * F(x) ** m for x in range(N + 1))
            assert total == 0


def test_hahn_sobolev_weight_value():
    w = hahn_sobolev_weight(0, 0, 0)
    assert cmath.exp(w.log(-0.5)) == pytest.approx(math.pi ** 2 / 4, rel=1e-13)


def test_meixner_weight_value():
    w = meixner_weight(1, -1)
    assert cmath.exp(w.log(-0.5)) == pytest.approx(math.pi, rel=1e-13)


def test_weight_schwarz_reflection():
    w = hahn_sobolev_weight(F(1, 3), F(5, 2), 4)
    z = -0.4 + 3.7j
    assert cmath.exp(w.log(z.conjugate())) == pytest.approx(cmath.exp(w.log(z)).conjugate(), rel=1e-13)


def test_weight_pole_hit():
    w = meixner_weight(F(3, 2), F(-1, 2))
    with pytest.raises(PoleHit):
        w.log(2.0)
