import csv
import io
from fractions import Fraction

import numpy as np
import pytest

from opoly.families import DualHahn, Hahn, Krawtchouk, Meixner, Racah, hypergeometric_build
from opoly.zeros import roots, to_csv, zero_structure_report

F = Fraction


def test_degree_N_plus_1_only_integer_roots():
    zs = roots(Hahn(1, 1, 5), 6)
    assert zs.integer_roots == [0, 1, 2, 3, 4, 5]
    assert len(zs.residual_roots) == 0


def test_degree_zero_empty():
    zs = roots(Hahn(1, 1, 5), 0)
    assert len(zs) == 0


def test_symmetric_hahn_line():
    zs = roots(Hahn(1, 1, 5), 15)
    assert zs.integer_roots == list(range(6))
    assert len(zs.residual_roots) == 9
    assert np.max(np.abs(zs.residual_roots.real - 2.5)) <= 1e-8
    rep = zero_structure_report(Hahn(1, 1, 5), 15)
    assert rep.passed and rep.line_check == "pass"


def test_nonsymmetric_hahn_conjugate_pairs():
    rep = zero_structure_report(Hahn(1, 15, 5), 15)
    assert rep.zeros.integer_roots == list(range(6))
    assert rep.line_check == "skipped"
    assert rep.conjugate_symmetric is True


def test_krawtchouk_residual_root():
    zs = roots(Krawtchouk(F(1, 2), 4), 6)
    assert zs.integer_roots == list(range(5))
    assert len(zs.residual_roots) == 1
    assert abs(zs.residual_roots[0] - 2) <= 1e-12


@pytest.mark.parametrize("spec, n", [(Hahn(F(1, 2), F(3, 2), 3), 9), (Krawtchouk(F(1, 3), 3), 8),
                                     (DualHahn(F(1, 2), F(2, 3), 3), 7),
                                     (Racah(-4, F(1, 2), F(1, 3), F(1, 5)), 6),
                                     (Meixner(F(3, 2), F(-1, 2)), 6)])
def test_roots_reproduce_polynomial(spec, n):
    zs = roots(spec, n)
    assert len(zs) == n
    p = hypergeometric_build(spec, n)
    # rebuild the monic polynomial from its roots and compare coefficients
    rebuilt = np.poly(zs.all_roots())[::-1]
    ref = p.to_array()
    assert np.max(np.abs(rebuilt - ref)) <= 1e-8 * np.max(np.abs(ref))
    assert np.max(zs.backward_errors, initial=0) <= 1e-12


def test_csv_schema():
    zs = roots(Hahn(1, 1, 5), 15)
    rows = list(csv.reader(io.StringIO(to_csv(zs))))
    assert rows[0] == ["re", "im", "kind"]
    body = rows[1:]
    assert len(body) == 15
    assert sum(r[2] == "integer" for r in body) == 6
    assert all(r[2] in ("integer", "residual") for r in body)
    for r in body:
        float(r[0]), float(r[1])


def test_report_requires_cutoff():
    with pytest.raises(ValueError):
        zero_structure_report(Hahn(1, 1, 5), 4)
