"""hypident: exact certification of reduction identities for sums of
products of generalized hypergeometric series.

Sums of r products of hypergeometric series, indexed by rational parameter
vectors and integer shift vectors, collapse to a rational expression whose
numerator is supported on an explicitly bounded exponent interval.  This
package assembles the left-hand side over arbitrary-precision rationals,
extracts the right-hand-side coefficients, and proves every coefficient
outside the support vanishes exactly — no floating point is involved in
any certificate.  A residue calculus on an associated family of rational
kernels and a Bernoulli-polynomial growth law give independent routes to
the same coefficients, which the verifier compares exactly.
"""

from .algebra import (
    LaurentSeries,
    Polynomial,
    RationalFunction,
    expansion_at_infinity,
    one_minus_z_power,
)
from .asymptotics import (
    Lemma1Report,
    bernoulli_combination,
    bernoulli_number,
    bernoulli_polynomial,
    check_residue_polynomial,
    exp_series_coefficient,
)
from .bessel import BesselReport, bessel_demo, bessel_j
from .errors import (
    BadLowerParameter,
    CheckFailed,
    DimensionMismatch,
    HypidentError,
    KBelowRange,
    KOutOfAlphaRange,
    NotDistinctModZ,
    NotSimplePole,
    NumericResidualExceeded,
    PochhammerPole,
    PrefactorPole,
    SupportViolation,
    TruncationError,
    TruncationTooSmall,
    ValidationError,
)
from .fuzzing import FuzzReport, fuzz, random_instance
from .hyper import (
    DerivedQuantities,
    IdentityInstance,
    Theorem,
    hyper_series,
    pochhammer,
    pochhammer_vec,
    validate,
)
from .identity import (
    BetaTable,
    VerificationReport,
    alpha_coefficient,
    beta_coefficients,
    lhs_series,
    verify,
)
from .residues import (
    ResidueKernel,
    residue_at_infinity,
    residue_at_simple_pole,
    residue_closed_form,
    residue_kernel,
    residue_sum_closed_form,
    sum_finite_residues,
)

__version__ = "0.1.0"

__all__ = [
    "BadLowerParameter",
    "BesselReport",
    "BetaTable",
    "CheckFailed",
    "DerivedQuantities",
    "DimensionMismatch",
    "FuzzReport",
    "HypidentError",
    "IdentityInstance",
    "KBelowRange",
    "KOutOfAlphaRange",
    "LaurentSeries",
    "Lemma1Report",
    "NotDistinctModZ",
    "NotSimplePole",
    "NumericResidualExceeded",
    "PochhammerPole",
    "Polynomial",
    "PrefactorPole",
    "RationalFunction",
    "ResidueKernel",
    "SupportViolation",
    "Theorem",
    "TruncationError",
    "TruncationTooSmall",
    "ValidationError",
    "VerificationReport",
    "alpha_coefficient",
    "bernoulli_combination",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bessel_demo",
    "bessel_j",
    "beta_coefficients",
    "check_residue_polynomial",
    "exp_series_coefficient",
    "expansion_at_infinity",
    "fuzz",
    "hyper_series",
    "lhs_series",
    "one_minus_z_power",
    "pochhammer",
    "pochhammer_vec",
    "random_instance",
    "residue_at_infinity",
    "residue_at_simple_pole",
    "residue_closed_form",
    "residue_kernel",
    "residue_sum_closed_form",
    "sum_finite_residues",
    "validate",
    "verify",
]
