"""Exact verifiers for the structural identities, plus limit ladders.

Every ``check_*`` function builds both sides of an identity in exact
arithmetic and returns a :class:`CheckReport`.  ``limit_probe`` evaluates a
parameter limit along a ladder of finite values and fits the decay rate.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebra import (
    GaussianRational, I, Poly, affine_substitute, as_exact, delta_pow, format_scalar, nabla_pow,
    pochhammer, to_complex,
)
from .errors import DegenerateParameters
from .families import (
    ContinuousDualHahn, ContinuousHahn, DualHahn, Family, Hahn, Krawtchouk, Meixner, Racah,
    Wilson, discrete_weight_extended, hypergeometric_build,
)

__all__ = [
    "CheckReport", "GF_FORMS", "LIMIT_RELATIONS", "LimitLadderReport",
    "check_delta_relations", "check_difference_equation", "check_factorization",
    "check_generating_function", "check_rodrigues", "consistency_triangle", "limit_probe",
]

EXACT_PASS = "ExactPass"
NUMERIC_PASS = "NumericPass"
FAIL = "Fail"


def _jsonable(value):
    if isinstance(value, (Fraction, GaussianRational, int)) and not isinstance(value, bool):
        return format_scalar(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.floating):
        return float(value)
    return value


@dataclass
class CheckReport:
    identity: str
    params: dict
    n: int
    verdict: str
    residual: float = 0.0
    witness: object = None
    k: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict in (EXACT_PASS, NUMERIC_PASS)

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "params": _jsonable(self.params), "n": self.n}
        if self.k is not None:
            out["k"] = self.k
        out.update({"verdict": self.verdict, "residual": self.residual,
                    "witness": _jsonable(self.witness)})
        if self.detail:
            out["detail"] = _jsonable(self.detail)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _compare(identity, params, n, lhs: Poly, rhs: Poly, k=None, **detail) -> CheckReport:
    """Coefficient-exact comparison; the witness is the first differing coefficient."""
    if lhs == rhs:
        return CheckReport(identity, params, n, EXACT_PASS, 0.0, None, k, detail)
    size = max(len(lhs.coeffs), len(rhs.coeffs))
    for j in range(size):
        a, b = lhs.coeff(j), rhs.coeff(j)
        if a != b:
            res = lhs.max_abs_diff(rhs)
            return CheckReport(identity, params, n, FAIL, res,
                               {"degree": j, "lhs": a, "rhs": b}, k, detail)
    raise AssertionError("unequal polynomials with equal coefficients")


def _hahn_params(spec: Hahn) -> dict:
    return {"alpha": spec.alpha, "beta": spec.beta, "N": spec.N}


# -- Hahn difference identities ----------------------------------------------------

def check_delta_relations(spec: Hahn, n: int, k: int) -> CheckReport:
    """``Δ^k h_n = (n-k+1)_k h_{n-k}^{α+k,β+k}(x; N-k)`` and the ∇ analogue at ``x-k``."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    a, b, N = spec.alpha, spec.beta, spec.N
    h = hypergeometric_build(spec, n)
    lowered = hypergeometric_build(Hahn(a + k, b + k, N - k), n - k) * pochhammer(n - k + 1, k)
    forward = _compare("delta_relation", _hahn_params(spec), n, delta_pow(h, k), lowered, k)
    if not forward.passed:
        return forward
    backward = affine_substitute(lowered, 1, -k)
    rep = _compare("delta_relation", _hahn_params(spec), n, nabla_pow(h, k), backward, k)
    rep.detail["operators"] = ["forward", "backward"]
    return rep


def check_difference_equation(spec: Hahn, n: int) -> CheckReport:
    """``x(β+N+1-x)∇Δh + ((α+1)N-(α+β+2)x)Δh + n(n+α+β+1)h = 0``."""
    a, b, N = spec.alpha, spec.beta, spec.N
    h = hypergeometric_build(spec, n)
    dh = delta_pow(h, 1)
    ndh = nabla_pow(dh, 1)
    lam = n * (n + a + b + 1)
    total = (Poly([0, b + N + 1, -1]) * ndh + Poly([(a + 1) * N, -(a + b + 2)]) * dh
             + h * lam)
    return _compare("difference_equation", _hahn_params(spec), n, total, Poly([]),
                    eigenvalue=lam)


def check_rodrigues(spec: Hahn, n: int) -> CheckReport:
    """Pointwise check at ``x = 0..N`` with the zero-extended weight.

    Weights are Pochhammer-normalized, so the Gamma constants dropped on the
    two sides differ by ``(α+1)_n (β+1)_n``, which is restored here.  For
    ``n > N`` the raised weight has empty support and ``h_n`` vanishes on the
    grid, so both sides are zero there; the report flags that case.
    """
    a, b, N = spec.alpha, spec.beta, spec.N
    h = hypergeometric_build(spec, n)
    raised = Hahn(a + n, b + n, N - n)
    den = pochhammer(a + b + n + 1, n)
    if den == 0:
        raise DegenerateParameters("(α+β+n+1)_n vanishes", factor="α+β+n+1")
    const = (-1) ** n * pochhammer(a + 1, n) * pochhammer(b + 1, n) / den
    worst = 0.0
    for x in range(N + 1):
        lhs = h(x) * discrete_weight_extended(spec, x)
        nab = sum((-1) ** j * math.comb(n, j) * discrete_weight_extended(raised, x - j)
                  for j in range(n + 1))
        rhs = const * nab
        if lhs != rhs:
            worst = abs(complex(to_complex(lhs - rhs)))
            return CheckReport("rodrigues", _hahn_params(spec), n, FAIL, worst,
                               {"x": x, "lhs": as_exact(lhs), "rhs": as_exact(rhs)})
    detail = {"beyond_cutoff": True} if n > N else {}
    return CheckReport("rodrigues", _hahn_params(spec), n, EXACT_PASS, 0.0, None, None, detail)


# -- generating functions ----------------------------------------------------------

def _series_mul(u: list[Poly], v: list[Poly], K: int) -> list[Poly]:
    out = [Poly([]) for _ in range(K + 1)]
    for i, a in enumerate(u[: K + 1]):
        if a.is_zero():
            continue
        for j, b in enumerate(v[: K + 1 - i]):
            out[i + j] = out[i + j] + a * b
    return out


def _hyper_series(uppers: list[Poly], lowers: list, scale, K: int) -> list[Poly]:
    """Coefficients of ``pFq(uppers; lowers | scale*t)`` up to ``t^K``.

    Upper parameters are affine polynomials in x, lower ones are scalars.
    """
    out = [Poly([1])]
    term = Poly([1])
    for k in range(K):
        num = Poly([1])
        for u in uppers:
            num = num * (u + k)
        den = Fraction(k + 1)
        for low in lowers:
            if low + k == 0:
                raise DegenerateParameters(f"series lower parameter {low}+{k} vanishes",
                                           factor=str(low))
            den = den * (low + k)
        term = term * num * (scale / den)
        out.append(term)
    return out


def _binomial_power(base_u: Poly, scale, K: int) -> list[Poly]:
    """``(1 - scale*t)^{e(x)}`` with ``base_u = -e(x)``: coefficient ``(−e)_k scale^k/k!``."""
    return _hyper_series([base_u], [], scale, K)


X_ = Poly([0, 1])


def _gf_hahn(spec: Hahn, K, printed):
    a, b, N = spec.alpha, spec.beta, spec.N
    rhs = _series_mul(_hyper_series([-X_], [a + 1], -1, K),
                      _hyper_series([X_ - N], [b + 1], 1, K), K)
    pref = [pochhammer(a + b + n + 1, n) / (pochhammer(b + 1, n) * pochhammer(a + 1, n)
                                           * pochhammer(1, n)) for n in range(K + 1)]
    return rhs, pref


def _gf_dual_hahn_1(spec: DualHahn, K, printed):
    ga, de, N = spec.gamma, spec.delta, spec.N
    rhs = _series_mul(_binomial_power(X_ - N, 1, K),
                      _hyper_series([-X_, -X_ - de], [ga + 1], 1, K), K)
    if printed:
        pref = [pochhammer(-N, n) / pochhammer(1, n) for n in range(K + 1)]
    else:
        pref = [1 / (pochhammer(ga + 1, n) * pochhammer(1, n)) for n in range(K + 1)]
    return rhs, pref


def _gf_dual_hahn_2(spec: DualHahn, K, printed):
    ga, de, N = spec.gamma, spec.delta, spec.N
    rhs = _series_mul(_binomial_power(-X_, 1, K),
                      _hyper_series([X_ - N, X_ + ga + 1], [-de - N], 1, K), K)
    if printed:
        pref = [pochhammer(ga + 1, n) * pochhammer(-N, n) / (pochhammer(-de - N, n)
                                                            * pochhammer(1, n))
                for n in range(K + 1)]
    else:
        pref = [1 / (pochhammer(-de - N, n) * pochhammer(1, n)) for n in range(K + 1)]
    return rhs, pref


def _gf_racah_1(spec: Racah, K, printed):
    al, be, ga, de = spec.alpha, spec.beta, spec.gamma, spec.delta
    rhs = _series_mul(_hyper_series([-X_, -X_ + be - ga], [be + de + 1], 1, K),
                      _hyper_series([X_ + al + 1, X_ + ga + 1], [al - de + 1], 1, K), K)
    if printed:
        pref = [pochhammer(al + 1, n) * pochhammer(ga + 1, n)
                / (pochhammer(al - de + 1, n) * pochhammer(1, n)) for n in range(K + 1)]
    else:
        pref = [pochhammer(n + al + be + 1, n)
                / (pochhammer(be + de + 1, n) * pochhammer(al - de + 1, n) * pochhammer(1, n))
                for n in range(K + 1)]
    return rhs, pref


def _gf_racah_2(spec: Racah, K, printed):
    al, be, ga, de = spec.alpha, spec.beta, spec.gamma, spec.delta
    rhs = _series_mul(_hyper_series([-X_, -X_ - de], [ga + 1], 1, K),
                      _hyper_series([X_ + al + 1, X_ + be + de + 1], [al + be - ga + 1], 1, K), K)
    if printed:
        pref = [pochhammer(al + 1, n) * pochhammer(be + de + 1, n)
                / (pochhammer(al - be - ga + 1, n) * pochhammer(1, n)) for n in range(K + 1)]
    else:
        pref = [pochhammer(n + al + be + 1, n)
                / (pochhammer(ga + 1, n) * pochhammer(al + be - ga + 1, n) * pochhammer(1, n))
                for n in range(K + 1)]
    return rhs, pref


def _gf_krawtchouk(spec: Krawtchouk, K, printed):
    p, N = spec.p, spec.N
    rhs = _series_mul(_binomial_power(-X_, (1 - p) / p, K),
                      _binomial_power(X_ - N, -1, K), K)
    if printed:
        pref = [Fraction(math.comb(N, n)) if N >= 0 else pochhammer(-N, n) * (-1) ** n
                / pochhammer(1, n) for n in range(K + 1)]
    else:
        pref = [Fraction((-1) ** n) / (pochhammer(1, n) * p ** n) for n in range(K + 1)]
    return rhs, pref


GF_FORMS: dict[str, tuple[type, Callable]] = {
    "hahn": (Hahn, _gf_hahn),
    "dual_hahn_1": (DualHahn, _gf_dual_hahn_1),
    "dual_hahn_2": (DualHahn, _gf_dual_hahn_2),
    "racah_1": (Racah, _gf_racah_1),
    "racah_2": (Racah, _gf_racah_2),
    "krawtchouk": (Krawtchouk, _gf_krawtchouk),
}


def _default_form(spec: Family) -> str:
    return {"hahn": "hahn", "dual_hahn": "dual_hahn_1", "racah": "racah_1",
            "krawtchouk": "krawtchouk"}[spec.name]


def check_generating_function(spec: Family, K: int, form: str | None = None,
                              normalization: str = "monic") -> CheckReport:
    """Compare ``t^n`` coefficients, ``n <= K``, as polynomials in x.

    ``normalization="monic"`` uses prefactors adapted to the monic polynomials
    built here; ``"printed"`` uses the prefactors of the classical
    (non-monic) normalization and is kept for comparison.
    """
    if K < 1:
        raise ValueError("order K must be at least 1")
    form = form or _default_form(spec)
    cls, builder = GF_FORMS[form]
    if not isinstance(spec, cls):
        raise ValueError(f"form {form!r} applies to {cls.__name__}")
    if form.startswith("racah") and spec.branch != "alpha":
        raise DegenerateParameters("the Racah generating functions are stated for α+1 = -N",
                                   factor="branch")
    rhs, pref = builder(spec, K, normalization == "printed")
    params = dict(spec.params(), form=form, normalization=normalization)
    for n in range(K + 1):
        lhs = (hypergeometric_build(spec, n) * pref[n]).at_x()
        lhs = Poly(lhs.coeffs, "x")
        rep = _compare("generating_function", params, n, lhs, Poly(rhs[n].coeffs, "x"))
        if not rep.passed:
            rep.detail["order"] = K
            return rep
    return CheckReport("generating_function", params, K, EXACT_PASS, 0.0,
                       detail={"order": K})


# -- factorizations ----------------------------------------------------------------

def _factors(spec: Family, n: int, variant: str = "corrected"):
    m = n - spec.N - 1
    N = spec.N
    if isinstance(spec, Hahn):
        a, b = spec.alpha, spec.beta
        left = Poly.from_roots(range(N + 1))
        ch = hypergeometric_build(ContinuousHahn(N + 1, b + N + 1, 1, a + 1), m)
        right = ch.compose(Poly([0, I])) * (-I) ** m
        return left, right
    if isinstance(spec, Krawtchouk):
        p = spec.p
        left = hypergeometric_build(spec, N + 1)
        mx = hypergeometric_build(Meixner(N + 2, p / (p - 1)), m)
        return left, mx.compose(Poly([-N - 1, 1]))
    if isinstance(spec, Racah):
        if spec.branch != "alpha":
            raise DegenerateParameters("the Racah factorization is stated for α+1 = -N",
                                       factor="branch")
        be, ga, de = spec.beta, spec.gamma, spec.delta
        s = spec.shift
        left = hypergeometric_build(Racah(-N - 1, be, ga, de), N + 1)
        w = hypergeometric_build(Wilson(N + (ga + de + 3) / 2, (-ga - de + 1) / 2,
                                        be + (-ga + de + 1) / 2, (ga - de + 1) / 2), m)
        # Wilson variable (i(x + s/2))^2 = -lambda - s^2/4
        right = Poly(w.compose(Poly([-s * s / 4, -1], "lambda")).coeffs, "lambda", spec.lattice)
        return left, right * (-1) ** m
    if isinstance(spec, DualHahn):
        ga, de = spec.gamma, spec.delta
        s = spec.shift
        left = hypergeometric_build(spec, N + 1)
        first = N + (ga + de + 2) / 2 if variant == "printed" else N + (ga + de + 3) / 2
        cdh = hypergeometric_build(ContinuousDualHahn(first, (-ga - de + 1) / 2,
                                                      (ga - de + 1) / 2), m)
        right = Poly(cdh.compose(Poly([-s * s / 4, -1], "lambda")).coeffs, "lambda",
                     spec.lattice)
        return left, right * (-1) ** m
    raise DegenerateParameters(f"no factorization for {spec.name}", factor="family")


def check_factorization(spec: Family, n: int, variant: str = "corrected") -> CheckReport:
    """Degree ``n > N``: ``p_n = p_{N+1} × (continuous-family polynomial of degree n-N-1)``.

    ``variant`` only matters for dual Hahn.  ``"corrected"`` uses the first
    continuous dual Hahn parameter ``N+(γ+δ+3)/2`` (matching the Racah case);
    ``"printed"`` uses ``N+(γ+δ+2)/2``, which agrees only when δ = 1.
    """
    if n < spec.N + 1:
        raise ValueError("factorization needs n >= N+1")
    left, right = _factors(spec, n, variant)
    params = dict(spec.params())
    if isinstance(spec, DualHahn):
        params["variant"] = variant
    lat = spec.lattice
    for x in range(spec.N + 1):
        v = x if lat is None or lat.shift is None else x * (x + lat.shift)
        if left(v) != 0:
            return CheckReport("factorization", params, n, FAIL, abs(complex(left(v))),
                               {"mass_point": x, "left_factor": left(v)})
    lhs = hypergeometric_build(spec, n)
    rhs = Poly((left * right).coeffs, spec.var, lat)
    rep = _compare("factorization", params, n, lhs, rhs)
    rep.detail["real_coefficients"] = rhs.is_real()
    return rep


# -- limits --------------------------------------------------------------------------

@dataclass
class LimitLadderReport:
    relation: str
    n: int
    params: dict
    ladder: list
    errors: list
    slope: float | None
    skipped: list = field(default_factory=list)

    @property
    def strictly_decreasing(self) -> bool:
        e = [x for x in self.errors if x is not None]
        if all(x == 0 for x in e):
            return True
        return all(b < a for a, b in zip(e, e[1:]))

    @property
    def final_ratio(self) -> float | None:
        e = [x for x in self.errors if x is not None]
        if len(e) < 2:
            return None
        if e[0] == 0:
            return 0.0
        return e[-1] / e[0]

    def to_dict(self) -> dict:
        return {"relation": self.relation, "n": self.n, "params": _jsonable(self.params),
                "ladder": [format_scalar(t) for t in self.ladder], "errors": self.errors,
                "slope": self.slope, "strictly_decreasing": self.strictly_decreasing,
                "final_ratio": self.final_ratio, "skipped": [format_scalar(t) for t in self.skipped]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _in_x(p: Poly) -> Poly:
    return Poly(p.at_x().coeffs, "x")


def _racah_to_hahn_a(t, n, P):
    al, be, N = P["alpha"], P["beta"], P["N"]
    R = hypergeometric_build(Racah(al, be, -N - 1, t, branch="gamma"), n)
    return _in_x(R) / pochhammer(be + t + 1, n), hypergeometric_build(Hahn(al, be, N), n)


def _racah_to_hahn_b(t, n, P):
    al, be, N = P["alpha"], P["beta"], P["N"]
    R = hypergeometric_build(Racah(al, be, t, -be - N - 1, branch="beta_delta"), n)
    return _in_x(R) / pochhammer(t + 1, n), hypergeometric_build(Hahn(al, be, N), n)


def _racah_to_hahn_c(t, n, P):
    be, ga, N = P["beta"], P["gamma"], P["N"]
    b2 = be + ga + N + 1
    R = hypergeometric_build(Racah(-N - 1, b2, ga, t, branch="alpha"), n)
    return _in_x(R) / pochhammer(b2 + t + 1, n), hypergeometric_build(Hahn(ga, be, N), n)


def _racah_to_dual_hahn_a(t, n, P):
    ga, de, N = P["gamma"], P["delta"], P["N"]
    R = hypergeometric_build(Racah(-N - 1, t, ga, de, branch="alpha"), n)
    return _in_x(R), _in_x(hypergeometric_build(DualHahn(ga, de, N), n))


def _racah_to_dual_hahn_b(t, n, P):
    ga, de, N = P["gamma"], P["delta"], P["N"]
    R = hypergeometric_build(Racah(t, -de - N - 1, ga, de, branch="beta_delta"), n)
    return _in_x(R), _in_x(hypergeometric_build(DualHahn(ga, de, N), n))


def _racah_to_dual_hahn_c(t, n, P):
    al, de, N = P["alpha"], P["delta"], P["N"]
    R = hypergeometric_build(Racah(al, t, -N - 1, al + de + N + 1, branch="gamma"), n)
    return _in_x(R), _in_x(hypergeometric_build(DualHahn(al, de, N), n))


def _hahn_to_krawtchouk(t, n, P):
    p, N = P["p"], P["N"]
    if P.get("as_printed"):
        h = hypergeometric_build(Hahn((1 - p) * t, p * t, N), n)
    else:
        h = hypergeometric_build(Hahn(p * t, (1 - p) * t, N), n)
    return h, hypergeometric_build(Krawtchouk(p, N), n)


def _dual_hahn_to_krawtchouk(t, n, P):
    p, N = P["p"], P["N"]
    R = hypergeometric_build(DualHahn(p * t, (1 - p) * t, N), n)
    return _in_x(R) * (p ** n / pochhammer(p * t + 1, n)), \
        hypergeometric_build(Krawtchouk(p, N), n)


def _chahn_to_meixner(t, n, P):
    be, c = P["beta"], P["c"]
    q = hypergeometric_build(ContinuousHahn(0, -t / c, t, be), n)
    approx = q.compose(Poly([0, I])) * (-I) ** n
    return Poly([as_exact(v) for v in approx.coeffs]), hypergeometric_build(Meixner(be, c), n)


LIMIT_RELATIONS: dict[str, tuple[Callable, dict]] = {
    "RacahToHahn_a": (_racah_to_hahn_a, {"alpha": Fraction(1, 2), "beta": Fraction(3, 2), "N": 3}),
    "RacahToHahn_b": (_racah_to_hahn_b, {"alpha": Fraction(1, 2), "beta": Fraction(3, 2), "N": 3}),
    "RacahToHahn_c": (_racah_to_hahn_c, {"beta": Fraction(3, 2), "gamma": Fraction(1, 2), "N": 3}),
    "RacahToDualHahn_a": (_racah_to_dual_hahn_a,
                          {"gamma": Fraction(1, 2), "delta": Fraction(3, 2), "N": 3}),
    "RacahToDualHahn_b": (_racah_to_dual_hahn_b,
                          {"gamma": Fraction(1, 2), "delta": Fraction(3, 2), "N": 3}),
    "RacahToDualHahn_c": (_racah_to_dual_hahn_c,
                          {"alpha": Fraction(1, 2), "delta": Fraction(3, 2), "N": 3}),
    "HahnToKrawtchouk": (_hahn_to_krawtchouk, {"p": Fraction(1, 3), "N": 3}),
    "DualHahnToKrawtchouk": (_dual_hahn_to_krawtchouk, {"p": Fraction(1, 3), "N": 3}),
    "CHahnToMeixner": (_chahn_to_meixner, {"beta": Fraction(3, 2), "c": Fraction(-1, 2)}),
}

def resolve_relation(name: str) -> str:
    """Accept ``RacahToHahn_a``, ``racahtohahn_a`` or ``racah-to-hahn-a``."""
    flat = re.sub(r"[^a-z0-9]", "", name.lower())
    for k in LIMIT_RELATIONS:
        if re.sub(r"[^a-z0-9]", "", k.lower()) == flat:
            return k
    raise KeyError(f"unknown limit relation {name!r}; choose from {sorted(LIMIT_RELATIONS)}")


def _fit_slope(ts, es):
    pts = [(math.log(float(t)), math.log(e)) for t, e in zip(ts, es) if e and e > 0]
    if len(pts) < 2:
        return None
    use = max(3, math.ceil(len(pts) / 2))
    pts = pts[-use:]
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def limit_probe(relation: str, n: int, ladder, **params) -> LimitLadderReport:
    """Max-coefficient distance to the limit polynomial along ``ladder``."""
    relation = resolve_relation(relation)
    builder, defaults = LIMIT_RELATIONS[relation]
    P = dict(defaults)
    P.update({k: (as_exact(v) if k != "as_printed" else v) for k, v in params.items()})
    if "N" in P:
        P["N"] = int(P["N"])
    ladder = [as_exact(t) for t in ladder]
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError("ladder must be strictly increasing")
    errors, used, skipped = [], [], []
    for t in ladder:
        try:
            approx, target = builder(t, n, P)
        except DegenerateParameters:
            skipped.append(t)
            errors.append(None)
            continue
        errors.append(float(approx.max_abs_diff(target)))
        used.append(t)
    good = [(t, e) for t, e in zip(ladder, errors) if e is not None]
    slope = _fit_slope([t for t, _ in good], [e for _, e in good])
    return LimitLadderReport(relation, n, P, ladder, errors, slope, skipped)


def consistency_triangle(p, N: int, t, n: int | None = None) -> float:
    """Distance between the Hahn factorization's right factor at ``α=pt, β=(1-p)t`` and
    the Krawtchouk factorization's right factor, at degree ``n`` (default N+2)."""
    p, t = as_exact(p), as_exact(t)
    n = N + 2 if n is None else n
    _, hahn_right = _factors(Hahn(p * t, (1 - p) * t, N), n)
    _, kraw_right = _factors(Krawtchouk(p, N), n)
    return float(hahn_right.max_abs_diff(kraw_right))
