"""JSON-in/JSON-out command line front end.

Instance files are JSON objects {"a": [...], "b": [...], "m": [...],
"n": [...]} with rationals written as strings "p/q" or "p"; r and s are
inferred from the vector lengths.  Every command prints a single JSON
payload on stdout.  Exit codes: 0 all checks pass, 1 a check failed,
2 input or validation error (with an {"error": ...} payload).  Output is
deterministic: identical input, flags, and seed produce byte-identical
bytes; --pretty toggles indentation only.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .asymptotics import check_residue_polynomial
from .bessel import DEFAULT_ORDER, DEFAULT_SAMPLES, DEFAULT_TOLERANCE, bessel_demo
from .errors import (
    CheckFailed,
    HypidentError,
    NumericResidualExceeded,
    SupportViolation,
)
from .fuzzing import fuzz
from .hyper import IdentityInstance
from .identity import DEFAULT_BUFFER, beta_coefficients, verify
from .residues import (
    residue_at_infinity,
    residue_kernel,
    residue_sum_closed_form,
    sum_finite_residues,
)

#: Exceptions that mean "the certificate failed", not "the input was bad".
_CHECK_FAILURES = (SupportViolation, CheckFailed, NumericResidualExceeded)


class UsageError(ValueError):
    """A structurally valid command line missing a required value."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: str | None = None
    buffer: int = DEFAULT_BUFFER
    k: int | None = None
    pretty: bool = False
    # fuzz
    count: int = 100
    r_range: tuple[int, int] = (2, 4)
    shift_range: int = 3
    seed: int = 0
    # bessel
    nu: Fraction | None = None
    m_shift: int | None = None
    order: int = DEFAULT_ORDER
    tolerance: float = DEFAULT_TOLERANCE
    samples: tuple[float, ...] = field(default=DEFAULT_SAMPLES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypident",
        description="Exact certification of hypergeometric-product reduction identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True, with_buffer=True):
        if with_input:
            p.add_argument("input", help="path to an instance JSON file")
        if with_buffer:
            p.add_argument(
                "--buffer",
                type=int,
                default=DEFAULT_BUFFER,
                help="extra exponents checked past the certified support (default 25)",
            )
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    p = sub.add_parser("verify", help="full verification report for one instance")
    add_common(p)

    p = sub.add_parser("coeffs", help="certified coefficient table only")
    add_common(p)

    p = sub.add_parser("lemma", help="polynomial law for residues at infinity")
    add_common(p, with_buffer=False)

    p = sub.add_parser("residue-check", help="three-route residue values at one k")
    add_common(p, with_buffer=False)
    p.add_argument("--k", type=int, default=None, help="kernel index (required)")

    p = sub.add_parser("fuzz", help="verify a batch of random instances")
    add_common(p, with_input=False)
    p.add_argument("--count", type=int, default=100)
    p.add_argument(
        "--r-range",
        type=int,
        nargs=2,
        default=(2, 4),
        metavar=("MIN", "MAX"),
        help="range of r (default 2 4)",
    )
    p.add_argument("--shift-range", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bessel", help="Bessel-product demonstration")
    add_common(p, with_input=False, with_buffer=False)
    p.add_argument("--nu", type=str, default=None, help='rational order, e.g. "1/3"')
    p.add_argument("--m", type=int, default=None, dest="m_shift", help="integer shift")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument(
        "--samples",
        type=str,
        default=None,
        help='comma-separated positive abscissae, e.g. "0.5,1,1.5,2"',
    )
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    samples = DEFAULT_SAMPLES
    if getattr(args, "samples", None):
        samples = tuple(float(x) for x in args.samples.split(","))
    nu = None
    if getattr(args, "nu", None) is not None:
        nu = Fraction(args.nu)
    return CliConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        buffer=getattr(args, "buffer", DEFAULT_BUFFER),
        k=getattr(args, "k", None),
        pretty=getattr(args, "pretty", False),
        count=getattr(args, "count", 100),
        r_range=tuple(getattr(args, "r_range", (2, 4))),
        shift_range=getattr(args, "shift_range", 3),
        seed=getattr(args, "seed", 0),
        nu=nu,
        m_shift=getattr(args, "m_shift", None),
        order=getattr(args, "order", DEFAULT_ORDER),
        tolerance=getattr(args, "tolerance", DEFAULT_TOLERANCE),
        samples=samples,
    )


def _load_instance(path: str | None) -> IdentityInstance:
    if path is None:
        raise UsageError("an instance file is required")
    data = json.loads(Path(path).read_text())
    return IdentityInstance.from_dict(data)


def _dispatch(config: CliConfig) -> tuple[dict, int]:
    if config.command == "verify":
        report = verify(_load_instance(config.input_path), config.buffer)
        return report.to_dict(), 0 if report.passed else 1

    if config.command == "coeffs":
        table = beta_coefficients(_load_instance(config.input_path), config.buffer)
        return table.to_dict(), 0

    if config.command == "lemma":
        report = check_residue_polynomial(_load_instance(config.input_path))
        return report.to_dict(), 0

    if config.command == "residue-check":
        if config.k is None:
            raise UsageError("residue-check requires --k")
        inst = _load_instance(config.input_path)
        kernel = residue_kernel(inst, config.k)
        finite = sum_finite_residues(kernel)
        at_infinity = residue_at_infinity(kernel)
        closed = residue_sum_closed_form(inst, config.k)
        agree = finite == at_infinity == closed
        payload = {
            "k": config.k,
            "finite_residue_sum": str(finite),
            "residue_at_infinity": str(at_infinity),
            "closed_form_sum": str(closed),
            "agree": agree,
        }
        return payload, 0 if agree else 1

    if config.command == "fuzz":
        report = fuzz(
            count=config.count,
            r_range=config.r_range,
            shift_range=config.shift_range,
            seed=config.seed,
            buffer=config.buffer,
        )
        return report.to_dict(), 0 if report.failed == 0 else 1

    if config.command == "bessel":
        if config.nu is None or config.m_shift is None:
            raise UsageError("bessel requires --nu and --m")
        report = bessel_demo(
            config.nu,
            config.m_shift,
            order=config.order,
            samples=config.samples,
            tolerance=config.tolerance,
        )
        return report.to_dict(), 0 if report.passed else 1

    raise UsageError(f"unknown command {config.command!r}")


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    print(text)


def run(config: CliConfig) -> int:
    """Execute one command; returns the process exit status."""
    try:
        payload, status = _dispatch(config)
    except _CHECK_FAILURES as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, config.pretty)
        return 1
    except (HypidentError, UsageError, OSError, ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, config.pretty)
        return 2
    _emit(payload, config.pretty)
    return status


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
