"""Seeded random instance generation and batch verification."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .hyper import IdentityInstance, validate
from .identity import DEFAULT_BUFFER, verify

MAX_REJECTIONS = 10_000


def random_rational(rng: random.Random, shift_range: int) -> Fraction:
    """Numerator bounded by 8 * shift_range in magnitude, denominator by
    min(12, 8 * shift_range)."""
    bound = max(8 * shift_range, 1)
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max(1, min(12, bound))))


def random_instance(
    rng: random.Random,
    r_range: tuple[int, int] = (2, 4),
    shift_range: int = 3,
    family: str = "any",
) -> IdentityInstance:
    """Draw a valid instance, rejecting (and fully redrawing) any draw that
    fails validation — parameter collisions modulo integers or prefactor
    poles.  ``family`` selects s: "one" forces s = r, "two" forces s < r,
    "any" draws s uniformly from {0, ..., r}."""
    if family not in ("any", "one", "two"):
        raise ValueError(f"unknown family {family!r}")
    for _ in range(MAX_REJECTIONS):
        r = rng.randint(*r_range)
        if family == "one":
            s = r
        elif family == "two":
            s = rng.randint(0, r - 1)
        else:
            s = rng.randint(0, r)
        a = tuple(random_rational(rng, shift_range) for _ in range(r))
        b = tuple(random_rational(rng, shift_range) for _ in range(s))
        m = tuple(rng.randint(-shift_range, shift_range) for _ in range(s))
        n = tuple(rng.randint(-shift_range, shift_range) for _ in range(r))
        inst = IdentityInstance(a=a, b=b, m=m, n=n)
        try:
            validate(inst)
        except ValidationError:
            continue
        return inst
    raise RuntimeError("rejection sampling did not find a valid instance")


@dataclass(frozen=True)
class FuzzReport:
    count: int
    seed: int
    passed: int
    failed: int
    failures: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "failures": list(self.failures),
        }


def fuzz(
    count: int,
    r_range: tuple[int, int] = (2, 4),
    shift_range: int = 3,
    seed: int = 0,
    buffer: int = DEFAULT_BUFFER,
    family: str = "any",
) -> FuzzReport:
    """Verify ``count`` random instances; deterministic for a fixed seed."""
    rng = random.Random(seed)
    passed = 0
    failures = []
    for index in range(count):
        inst = random_instance(rng, r_range=r_range, shift_range=shift_range, family=family)
        report = verify(inst, buffer)
        if report.passed:
            passed += 1
        else:
            failures.append(
                {
                    "index": index,
                    "instance": inst.to_dict(),
                    "vanishing_ok": report.vanishing_ok,
                    "cross_checks": dict(report.cross_checks),
                }
            )
    return FuzzReport(
        count=count,
        seed=seed,
        passed=passed,
        failed=count - passed,
        failures=tuple(failures),
    )
