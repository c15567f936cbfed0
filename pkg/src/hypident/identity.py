"""Assembly and certification of the reduction identities.

The left-hand side S(z) is a sum of r terms, each a prefactor times
z^{-n_i} times a product of two hypergeometric series.  The certified
claims are support bounds:

  balanced (s = r):   (1-z)^{p+1} S(z) is a Laurent polynomial supported
                      on [-n_max, p - m_min];
  confluent (s < r):  S(z) itself is supported on
                      [-n_max, max(-m_min - 1, p)].

``beta_coefficients`` extracts the coefficient table on the support and
proves every coefficient above it vanishes exactly, out to a configurable
buffer past the boundary.  ``verify`` additionally cross-checks the series
coefficients against the residue machinery (three independent routes) and
the Bernoulli polynomial law.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentSeries, one_minus_z_power
from .asymptotics import check_residue_polynomial
from .errors import CheckFailed, KOutOfAlphaRange, SupportViolation, TruncationTooSmall
from .hyper import (
    DerivedQuantities,
    IdentityInstance,
    Theorem,
    hyper_series,
    pochhammer_vec,
    validate,
)
from .residues import (
    residue_at_infinity,
    residue_kernel,
    residue_sum_closed_form,
    sum_finite_residues,
)

DEFAULT_BUFFER = 25


def lhs_series(inst: IdentityInstance, trunc: int) -> LaurentSeries:
    """The identity's left-hand side as an exact series through z^trunc.

    For confluent instances the second series carries argument sign
    (-1)^(r-s), folded into its coefficients, and term i carries the
    multiplier (-1)^((r-s) n_i).  A constant multiplier instead of the
    n_i-dependent one breaks the support bound whenever r - s is odd and
    the n_i parities are mixed, so the per-term form is the one certified.
    """
    derived = validate(inst)
    if trunc < -derived.n_max:
        raise TruncationTooSmall(
            f"truncation {trunc} cannot reach the lowest exponent {-derived.n_max}"
        )
    diff = derived.r - derived.s
    total = LaurentSeries.zero(trunc)
    for i in range(derived.r):
        a_i, n_i = inst.a[i], inst.n[i]
        if trunc + n_i < 0:
            continue  # term starts above the window
        others = [l for l in range(derived.r) if l != i]
        first = hyper_series(
            [b_l - a_i for b_l in inst.b],
            [1 + inst.a[l] - a_i for l in others],
            trunc + n_i,
        )
        second = hyper_series(
            [1 - b_l + a_i + m_l - n_i for b_l, m_l in zip(inst.b, inst.m)],
            [1 - inst.a[l] + a_i + inst.n[l] - n_i for l in others],
            trunc + n_i,
        )
        if diff % 2:
            second = second.substitute_neg_z()
        prefactor = pochhammer_vec(
            [1 - b_l + a_i for b_l in inst.b], [m_l - n_i for m_l in inst.m]
        ) / pochhammer_vec(
            [a_i - inst.a[l] for l in others], [inst.n[l] - n_i + 1 for l in others]
        )
        if (diff * n_i) % 2:
            prefactor = -prefactor
        total = total + (first * second).shift(-n_i).scale(prefactor)
    return total


def alpha_coefficient(inst: IdentityInstance, k: int) -> Fraction:
    """Series coefficient of z^k in the low-order range, from the residue
    closed forms.  Only defined for -n_max <= k <= -m_min - 1 (for balanced
    instances this is where the coefficient is not covered by the kernel)."""
    derived = validate(inst)
    if not (-derived.n_max <= k <= -derived.m_min - 1):
        raise KOutOfAlphaRange(
            f"k={k} outside [{-derived.n_max}, {-derived.m_min - 1}]"
        )
    return residue_sum_closed_form(inst, k)


@dataclass(frozen=True)
class BetaTable:
    """Certified right-hand-side coefficients with their support interval.

    An empty interval (support_high < support_low) encodes the identically
    zero right-hand side.
    """

    support_low: int
    support_high: int
    values: dict[int, Fraction]
    theorem: Theorem

    @property
    def is_empty(self) -> bool:
        return self.support_high < self.support_low

    def beta_map(self) -> dict[str, str]:
        return {str(j): str(v) for j, v in sorted(self.values.items())}

    def to_dict(self) -> dict:
        return {
            "support_low": self.support_low,
            "support_high": self.support_high,
            "theorem": self.theorem.value,
            "beta": self.beta_map(),
        }


def _certified_window(derived: DerivedQuantities, buffer: int) -> tuple[int, int]:
    """(support_high, truncation K) for the instance's support claim."""
    if buffer < 1:
        raise ValueError("buffer must be positive")
    if derived.theorem is Theorem.ONE:
        support_high = derived.p - derived.m_min
    else:
        support_high = max(-derived.m_min - 1, derived.p)
    return support_high, max(support_high, -derived.n_max) + buffer


def _reduced_series(
    inst: IdentityInstance, derived: DerivedQuantities, trunc: int
) -> LaurentSeries:
    """S(z) for confluent instances, (1-z)^(p+1) S(z) for balanced ones."""
    series = lhs_series(inst, trunc)
    if derived.theorem is Theorem.ONE:
        # the factor needs its own truncation high enough not to cap the product
        series = one_minus_z_power(derived.p + 1, trunc + derived.n_max) * series
    return series


def _extract_table(
    derived: DerivedQuantities,
    reduced: LaurentSeries,
    support_high: int,
    trunc: int,
) -> tuple[BetaTable, list[str]]:
    """Read the coefficient table off the reduced series and collect any
    violations of the forced-vanishing ranges."""
    support_low = -derived.n_max
    violations = []
    for e in range(reduced.low, support_low):
        value = reduced.coefficient(e)
        if value != 0:
            violations.append(f"coefficient {value} at z^{e} below support")
    for e in range(max(support_high + 1, reduced.low), trunc + 1):
        value = reduced.coefficient(e)
        if value != 0:
            violations.append(f"coefficient {value} at z^{e} above support")
    values = {
        j: reduced.coefficient(j)
        for j in range(support_low, support_high + 1)
    }
    table = BetaTable(
        support_low=support_low,
        support_high=support_high,
        values=values,
        theorem=derived.theorem,
    )
    return table, violations


def beta_coefficients(inst: IdentityInstance, buffer: int = DEFAULT_BUFFER) -> BetaTable:
    """Extract the certified coefficient table.

    Raises SupportViolation if any coefficient that the identity forces to
    vanish is nonzero; with exact arithmetic that signals a bug or an
    invalid instance, never a tolerance problem.
    """
    derived = validate(inst)
    support_high, trunc = _certified_window(derived, buffer)
    reduced = _reduced_series(inst, derived, trunc)
    table, violations = _extract_table(derived, reduced, support_high, trunc)
    if violations:
        raise SupportViolation(violations[0])
    return table


@dataclass(frozen=True)
class VerificationReport:
    """Everything ``verify`` established about one instance.

    ``cross_checks`` maps check name to True/False, or None when the check
    does not apply (the residue, alpha, and polynomial-law routes are
    defined for balanced instances only).
    """

    instance: IdentityInstance
    derived: DerivedQuantities
    beta: BetaTable
    checked_up_to: int
    vanishing_ok: bool
    cross_checks: dict[str, bool | None]

    @property
    def passed(self) -> bool:
        return self.vanishing_ok and all(
            v is not False for v in self.cross_checks.values()
        )

    def to_dict(self) -> dict:
        return {
            "instance": self.instance.to_dict(),
            "derived": self.derived.to_dict(),
            "beta": self.beta.beta_map(),
            "checked_up_to": self.checked_up_to,
            "vanishing_ok": self.vanishing_ok,
            "cross_checks": dict(self.cross_checks),
        }


def verify(inst: IdentityInstance, buffer: int = DEFAULT_BUFFER) -> VerificationReport:
    """Certify the instance's support claim and run all exact cross-checks.

    Check failures are recorded in the report rather than raised; only
    validation of the instance itself can raise.
    """
    derived = validate(inst)
    support_high, trunc = _certified_window(derived, buffer)
    series = lhs_series(inst, trunc)
    if derived.theorem is Theorem.ONE:
        reduced = one_minus_z_power(derived.p + 1, trunc + derived.n_max) * series
    else:
        reduced = series
    table, violations = _extract_table(derived, reduced, support_high, trunc)

    cross_checks: dict[str, bool | None] = {
        "residue": None,
        "lemma1": None,
        "alpha": None,
    }
    if derived.theorem is Theorem.ONE:
        residue_ok = True
        for k in range(-derived.m_min, -derived.m_min + buffer // 2 + 1):
            kernel = residue_kernel(inst, k)
            routes = {
                sum_finite_residues(kernel),
                residue_at_infinity(kernel),
                residue_sum_closed_form(inst, k),
                series.coefficient(k),
            }
            if len(routes) != 1:
                residue_ok = False
                break
        cross_checks["residue"] = residue_ok
        try:
            check_residue_polynomial(inst)
            cross_checks["lemma1"] = True
        except CheckFailed:
            cross_checks["lemma1"] = False
        alpha_ok = True
        for k in range(-derived.n_max, -derived.m_min):
            if residue_sum_closed_form(inst, k) != series.coefficient(k):
                alpha_ok = False
                break
        cross_checks["alpha"] = alpha_ok

    return VerificationReport(
        instance=inst,
        derived=derived,
        beta=table,
        checked_up_to=trunc,
        vanishing_ok=not violations,
        cross_checks=cross_checks,
    )
