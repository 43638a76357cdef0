"""Discrete classical orthogonal polynomials for every degree.

Exact construction of the Hahn, dual Hahn, Racah and Krawtchouk families
(and their continuous companions) past the classical cutoff ``n = N``,
the Sobolev-type products that make them orthogonal, identity checkers,
limit probes and a root finder with exact deflation.
"""

from .algebra import GaussianRational, Lattice, Poly, as_exact, parse_scalar, pochhammer
from .errors import (
    ConditionViolated, ContourInvalid, DegenerateParameters, NoCounterpart, NonConvergence,
    NumericBreakdown, OpolyError, PoleHit, SeriesDiverges, TailTooFat,
)
from .families import (
    ContinuousDualHahn, ContinuousHahn, DualHahn, Hahn, Krawtchouk, Meixner, Racah, Wilson,
    family_from_name, hypergeometric_build, recurrence_coefficients, relate, sobolev_weight,
    ttrr_build,
)
from .identities import (
    check_delta_relations, check_difference_equation, check_factorization,
    check_generating_function, check_rodrigues, consistency_triangle, limit_probe,
)
from .kernels import BACKEND
from .sobolev import (
    QuadratureSpec, characterize, contour_inner, gram, meixner_orthogonality_pair,
    sobolev_inner,
)
from .zeros import roots, to_csv, zero_structure_report

__version__ = "0.1.0"
