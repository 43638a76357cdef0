import random
from fractions import Fraction

import pytest

from opoly.algebra import GaussianRational
from opoly.errors import DegenerateParameters
from opoly.families import (
    ContinuousDualHahn, ContinuousHahn, DualHahn, Hahn, Krawtchouk, Meixner, Racah, Wilson,
    hypergeometric_build,
)


def rand_frac(rng, lo=-30, hi=30, den=7):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_pos(rng, hi=40, den=7):
    return Fraction(rng.randint(1, hi), rng.randint(1, den))


def rand_gauss(rng):
    return GaussianRational(rand_frac(rng), rand_frac(rng, -10, 10))


def _draw(name, rng):
    N = rng.randint(0, 5)
    if name == "hahn":
        return Hahn(rand_frac(rng), rand_frac(rng), N)
    if name == "continuous_hahn":
        pick = rand_gauss if rng.random() < 0.5 else rand_frac
        return ContinuousHahn(*(pick(rng) for _ in range(4)))
    if name == "wilson":
        return Wilson(*(rand_frac(rng) for _ in range(4)))
    if name == "racah":
        branch = rng.choice(["alpha", "beta_delta", "gamma"])
        al, be, ga, de = (rand_frac(rng) for _ in range(4))
        if branch == "alpha":
            al = Fraction(-N - 1)
        elif branch == "beta_delta":
            be = -N - 1 - de
        else:
            ga = Fraction(-N - 1)
        return Racah(al, be, ga, de, branch=branch)
    if name == "dual_hahn":
        return DualHahn(rand_frac(rng), rand_frac(rng), N)
    if name == "continuous_dual_hahn":
        return ContinuousDualHahn(*(rand_frac(rng) for _ in range(3)))
    if name == "krawtchouk":
        p = rand_frac(rng)
        while p in (0, 1):
            p = rand_frac(rng)
        return Krawtchouk(p, N)
    if name == "meixner":
        c = rand_frac(rng)
        while c == 1:
            c = rand_frac(rng)
        return Meixner(rand_frac(rng), c)
    raise KeyError(name)


def admissible_draw(name, rng, nmax=12):
    """Draw parameters until every degree up to ``nmax`` is constructible."""
    for _ in range(1000):
        try:
            spec = _draw(name, rng)
            for n in range(nmax + 1):
                hypergeometric_build(spec, n)
            return spec
        except DegenerateParameters:
            continue
    raise RuntimeError(f"no admissible draw for {name}")


FAMILY_NAMES = ["hahn", "continuous_hahn", "wilson", "racah", "dual_hahn",
                "continuous_dual_hahn", "krawtchouk", "meixner"]


@pytest.fixture
def rng():
    return random.Random(20240611)
