"""Bernoulli machinery and the polynomial law for residues at infinity.

For balanced instances (s = r) the residue of the kernel at infinity,
viewed as a function of the index k, is a polynomial of degree p: zero when
p = -1, identically 1 when p = 0, and for p >= 1 equal to the coefficient
polynomial q_p obtained by exponentiating the logarithmic expansion of the
kernel, whose coefficients are explicit Bernoulli-polynomial combinations
of the instance data.  ``check_residue_polynomial`` confirms the law by
evaluating both routes at p + 3 integer points, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .algebra import Polynomial
from .errors import CheckFailed
from .hyper import IdentityInstance, Theorem, validate
from .residues import residue_at_infinity, residue_kernel

# Above this order the displayed composition sum for the exponential is
# replaced by the equivalent O(s^2) recurrence; enumerating 2^(s-1) ordered
# compositions is hopeless for the large p that unbounded fuzzing can hit.
_COMPOSITION_LIMIT = 9


def bernoulli_number(j: int) -> Fraction:
    """Bernoulli number B_j in the B_1 = -1/2 convention, by the recurrence
    sum_{i=0}^{j} C(j+1, i) B_i = 0 with B_0 = 1."""
    if j < 0:
        raise ValueError("index must be non-negative")
    values: list[Fraction] = []
    for t in range(j + 1):
        if t == 0:
            values.append(Fraction(1))
            continue
        acc = sum(comb(t + 1, i) * values[i] for i in range(t))
        values.append(Fraction(-acc, t + 1))
    return values[j]


def bernoulli_polynomial(n: int) -> Polynomial:
    """The monic degree-n Bernoulli polynomial
    B_n(x) = sum_l C(n, l) B_{n-l} x^l."""
    if n < 0:
        raise ValueError("index must be non-negative")
    numbers = [bernoulli_number(t) for t in range(n + 1)]
    return Polynomial(tuple(comb(n, l) * numbers[n - l] for l in range(n + 1)))


def _require_balanced(inst: IdentityInstance):
    derived = validate(inst)
    if derived.theorem is not Theorem.ONE:
        raise ValueError("defined only for balanced instances (s = r)")
    return derived


def bernoulli_combination(inst: IdentityInstance, j: int) -> Polynomial:
    """The degree-j polynomial in k collecting the Bernoulli-polynomial
    terms at order j of the kernel's logarithmic expansion:

        sum_i [ B_{j+1}(-a_i - k) - B_{j+1}(1 - b_i - k)
                + B_{j+1}(1 - b_i + m_i) - B_{j+1}(1 - a_i + n_i) ].

    The k^{j+1} terms of the two k-dependent compositions cancel pairwise,
    dropping the degree to exactly j (generically).
    """
    _require_balanced(inst)
    if j < 1:
        raise ValueError("order must be positive")
    be = bernoulli_polynomial(j + 1)
    total = Polynomial.zero()
    for a_i, b_i, m_i, n_i in zip(inst.a, inst.b, inst.m, inst.n):
        total = total + be.compose_affine(-a_i, -1)
        total = total - be.compose_affine(1 - b_i, -1)
        total = total + Polynomial.constant(be(1 - b_i + m_i))
        total = total - Polynomial.constant(be(1 - a_i + n_i))
    return total


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def exp_series_coefficient(inst: IdentityInstance, s_index: int) -> Polynomial:
    """Coefficient polynomial q_s of the exponentiated kernel expansion.

    The log expansion has coefficient G_j = (-1)^(j+1) Q_j / (j (j+1)) at
    order j, with Q_j = ``bernoulli_combination``; exponentiating gives

        q_s = sum_{l=1}^{s} (1/l!) sum_{s_1+...+s_l=s} G_{s_1} ... G_{s_l},

    a polynomial in k of degree s, with q_0 = 1.  Small orders enumerate
    the compositions literally; large orders use the derivative recurrence
    s q_s = sum_t t G_t q_{s-t}, which computes the same polynomials.
    """
    _require_balanced(inst)
    if s_index < 0:
        raise ValueError("order must be non-negative")
    if s_index == 0:
        return Polynomial.one()
    gs: dict[int, Polynomial] = {}
    for j in range(1, s_index + 1):
        sign = 1 if (j + 1) % 2 == 0 else -1
        gs[j] = bernoulli_combination(inst, j) * Fraction(sign, j * (j + 1))
    if s_index <= _COMPOSITION_LIMIT:
        total = Polynomial.zero()
        for l in range(1, s_index + 1):
            block = Polynomial.zero()
            for parts in _compositions(s_index, l):
                prod = Polynomial.one()
                for part in parts:
                    prod = prod * gs[part]
                block = block + prod
            total = total + block * Fraction(1, factorial(l))
        return total
    qs = [Polynomial.one()]
    for t in range(1, s_index + 1):
        acc = Polynomial.zero()
        for u in range(1, t + 1):
            acc = acc + gs[u] * qs[t - u] * u
        qs.append(acc * Fraction(1, t))
    return qs[s_index]


@dataclass(frozen=True)
class Lemma1Report:
    """Outcome of the polynomial-law check on residues at infinity."""

    p: int
    points: tuple[int, ...]
    residue_values: tuple[Fraction, ...]
    polynomial: Polynomial | None  # q_p when p >= 1, else None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "points": list(self.points),
            "residue_values": [str(v) for v in self.residue_values],
            "polynomial": (
                [str(c) for c in self.polynomial.coeffs]
                if self.polynomial is not None
                else None
            ),
            "ok": True,
        }


def check_residue_polynomial(inst: IdentityInstance) -> Lemma1Report:
    """Confirm the degree-p polynomial law for residues at infinity.

    p = -1: the residue vanishes at every sampled k.  p = 0: it equals 1.
    p >= 1: it matches q_p at k = -m_min .. -m_min + p + 2; p + 3 points
    over-determine a degree-p polynomial, so agreement there is equality.
    Raises CheckFailed at the first discrepant k.
    """
    derived = _require_balanced(inst)
    p = derived.p
    count = p + 3 if p >= 1 else 3
    points = tuple(range(-derived.m_min, -derived.m_min + count))
    values = tuple(residue_at_infinity(residue_kernel(inst, k)) for k in points)
    poly = exp_series_coefficient(inst, p) if p >= 1 else None
    for k, value in zip(points, values):
        if p == -1:
            expected = Fraction(0)
        elif p == 0:
            expected = Fraction(1)
        else:
            expected = poly(k)
        if value != expected:
            raise CheckFailed(
                f"residue at infinity for k={k} is {value}, expected {expected} (p={p})"
            )
    return Lemma1Report(p=p, points=points, residue_values=values, polynomial=poly)
