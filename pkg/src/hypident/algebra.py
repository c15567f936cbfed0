"""Exact algebraic tower: dense polynomials, truncated Laurent series, and
rational functions over arbitrary-precision rationals.

Every coefficient is a `fractions.Fraction`; no floating point enters this
module.  The truncation order of a Laurent series is a hard certificate
boundary: coefficients at exponents <= trunc are exactly known, anything
above is unknown and reading it raises instead of silently returning 0.
All values are immutable after construction, so they can be shared freely
between threads and concurrently running verification jobs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Union

from .errors import TruncationError

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial (sentinel; compares below every integer).
NEG_INF = float("-inf")


def as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; coefficient index = exponent.

    Trailing zero coefficients are stripped on construction, so ``coeffs``
    is canonical and the zero polynomial is the empty tuple.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = tuple(as_fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def of(cls, *coeffs: Scalar) -> Polynomial:
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def one(cls) -> Polynomial:
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((as_fraction(c),))

    @classmethod
    def identity(cls) -> Polynomial:
        """The polynomial z."""
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        """Monic product of (z - root) over the given roots."""
        out = cls.one()
        for root in roots:
            out = out * cls((-as_fraction(root), Fraction(1)))
        return out

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, e: int) -> Fraction:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else Fraction(0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Polynomial(tuple(out))

    def __rmul__(self, other: Scalar) -> Polynomial:
        return self.scale(other)

    def scale(self, c: Scalar) -> Polynomial:
        c = as_fraction(c)
        return Polynomial(tuple(c * x for x in self.coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Long division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 1)
        lead = other.leading
        d = len(other.coeffs) - 1
        for i in range(len(rem) - 1, d - 1, -1):
            factor = rem[i] / lead
            if factor == 0:
                continue
            q[i - d] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= factor * c
        return Polynomial(tuple(q)), Polynomial(tuple(rem))

    def deflate(self, z0: Scalar) -> tuple[Polynomial, Fraction]:
        """Synthetic division by (z - z0): returns (quotient, remainder)."""
        z0 = as_fraction(z0)
        if not self.coeffs:
            return Polynomial.zero(), Fraction(0)
        out = [Fraction(0)] * (len(self.coeffs) - 1)
        carry = Fraction(0)
        for i in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[i] + carry * z0
            out[i - 1] = carry
        rem = self.coeffs[0] + carry * z0
        return Polynomial(tuple(out)), rem

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor (Euclid with monic remainders)."""
        a, b = self, other
        while not b.is_zero:
            _, r = a.divmod(b)
            a, b = b, r.monic() if not r.is_zero else r
        return a.monic() if not a.is_zero else a

    def compose_affine(self, c0: Scalar, c1: Scalar) -> Polynomial:
        """self(c0 + c1*t) expanded as a polynomial in t."""
        affine = Polynomial((as_fraction(c0), as_fraction(c1)))
        acc = Polynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * affine + Polynomial.constant(c)
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            var = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            body = f"{mag}" if not var else (var if mag == 1 else f"{mag}*{var}")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated formal Laurent series with exact coefficients.

    ``coeffs[i]`` is the coefficient of z**(low + i).  Coefficients at
    exponents in (low + len(coeffs) - 1, trunc] are exactly zero; exponents
    above ``trunc`` are unknown and querying them raises TruncationError.
    Construction canonicalises by stripping zero coefficients at both ends.
    """

    low: int
    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self) -> None:
        cs = tuple(as_fraction(c) for c in self.coeffs)
        low = self.low
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        while cs and cs[0] == 0:
            cs = cs[1:]
            low += 1
        if not cs:
            low = self.trunc + 1
        if low + len(cs) - 1 > self.trunc:
            raise ValueError("series stores coefficients above its truncation")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "low", low)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> LaurentSeries:
        return cls(trunc + 1, (), trunc)

    @classmethod
    def from_polynomial(cls, p: Polynomial, trunc: int) -> LaurentSeries:
        return cls(0, p.coeffs[: trunc + 1] if trunc >= 0 else (), trunc)

    @classmethod
    def monomial(cls, c: Scalar, exponent: int, trunc: int) -> LaurentSeries:
        return cls(exponent, (as_fraction(c),), trunc)

    # -- access -------------------------------------------------------

    @property
    def high(self) -> int:
        """Largest exponent with a stored coefficient (low - 1 if none)."""
        return self.low + len(self.coeffs) - 1

    def coefficient(self, e: int) -> Fraction:
        if e > self.trunc:
            raise TruncationError(
                f"coefficient at z^{e} requested, certified only up to z^{self.trunc}"
            )
        if self.low <= e <= self.high:
            return self.coeffs[e - self.low]
        return Fraction(0)

    def coefficients_between(self, lo: int, hi: int) -> list[Fraction]:
        return [self.coefficient(e) for e in range(lo, hi + 1)]

    def items(self) -> Iterator[tuple[int, Fraction]]:
        for i, c in enumerate(self.coeffs):
            yield self.low + i, c

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        trunc = min(self.trunc, other.trunc)
        low = min(self.low, other.low)
        if low > trunc:
            return LaurentSeries.zero(trunc)
        out = [Fraction(0)] * (trunc - low + 1)
        for part in (self, other):
            for e, c in part.items():
                if e <= trunc:
                    out[e - low] += c
        return LaurentSeries(low, tuple(out), trunc)

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.low, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        return self + (-other)

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        # Every returned coefficient must be a complete convolution, which
        # caps the result truncation by both operands' certified windows.
        trunc = min(self.trunc + other.low, other.trunc + self.low)
        low = self.low + other.low
        if low > trunc or self.is_zero or other.is_zero:
            return LaurentSeries.zero(trunc)
        out = [Fraction(0)] * (trunc - low + 1)
        for ea, ca in self.items():
            if ca == 0:
                continue
            for eb, cb in other.items():
                e = ea + eb
                if e > trunc:
                    break
                out[e - low] += ca * cb
        return LaurentSeries(low, tuple(out), trunc)

    def scale(self, c: Scalar) -> LaurentSeries:
        c = as_fraction(c)
        return LaurentSeries(self.low, tuple(c * x for x in self.coeffs), self.trunc)

    def shift(self, t: int) -> LaurentSeries:
        """Multiply by z**t."""
        return LaurentSeries(self.low + t, self.coeffs, self.trunc + t)

    def substitute_neg_z(self) -> LaurentSeries:
        """The series of f(-z): coefficient at z^e picks up (-1)^e."""
        return LaurentSeries(
            self.low,
            tuple(c if (self.low + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)),
            self.trunc,
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return f"0 + O(z^{self.trunc + 1})"
        parts = []
        for e, c in self.items():
            if c == 0:
                continue
            var = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            mag = abs(c)
            body = f"{mag}" if not var else (var if mag == 1 else f"{mag}*{var}")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        return f"{text} + O(z^{self.trunc + 1})"


def one_minus_z_power(exponent: int, trunc: int) -> LaurentSeries:
    """(1 - z)**exponent as a series with binomial coefficients."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    top = min(exponent, trunc)
    coeffs = tuple(Fraction((-1) ** i * comb(exponent, i)) for i in range(top + 1))
    return LaurentSeries(0, coeffs, trunc)


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two exact polynomials.  Stored as given (no forced gcd
    reduction); ``normalize`` produces the coprime, monic-denominator form.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")

    @property
    def degree_offset(self) -> int | float:
        """deg(num) - deg(den); the leading exponent of the expansion at
        infinity (-inf for the zero function)."""
        if self.num.is_zero:
            return NEG_INF
        return self.num.degree - self.den.degree

    def __call__(self, x: Scalar) -> Fraction:
        return self.num(x) / self.den(x)

    def normalize(self) -> RationalFunction:
        g = self.num.gcd(self.den)
        num, den = self.num, self.den
        if not g.is_zero and g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.leading
        return RationalFunction(num.scale(1 / lead), den.scale(1 / lead))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def expansion_at_infinity(
    f: RationalFunction, depth: int
) -> tuple[int | float, list[Fraction]]:
    """Leading exponent and first ``depth`` coefficients of f at infinity.

    f(z) = C_top z^top + C_{top-1} z^{top-1} + ... with top = deg num - deg den,
    computed by exact power-series division of the reversed-coefficient
    polynomials (substituting w = 1/z).  The coefficient of z^{-1} sits at
    list index top + 1 whenever depth > top + 1.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if f.num.is_zero:
        return NEG_INF, [Fraction(0)] * depth
    revn = f.num.coeffs[::-1]
    revd = f.den.coeffs[::-1]
    out: list[Fraction] = []
    for t in range(depth):
        acc = revn[t] if t < len(revn) else Fraction(0)
        for u in range(max(0, t - len(revd) + 1), t):
            acc -= out[u] * revd[t - u]
        out.append(acc / revd[0])
    return f.num.degree - f.den.degree, out
