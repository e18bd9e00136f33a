"""Command-line front door.

Subcommands:

* ``gen``   - generate a coefficient cache file for one family
* ``zero``  - approximate one zero, with per-order diagnostics
* ``table`` - reproduce a reference residual grid and report per cell
* ``airy``  - print a negative zero of Ai, Bi or Ai'

Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 verification
failure.  ``BESSELZEROS_DIGITS`` overrides the default working precision
(40 digits).  Machine-readable output (``zero --json``) emits all numbers as
decimal strings to keep full precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from mpmath import mp

from . import cache
from .airy import AiryZeroKind, BracketError, PrecisionError, airy_zero
from .lgcoeffs import Family
from .pipeline import ZeroFamily, zero_expansion
from .precision import default_digits, to_string
from .residual import FixtureMissingError, load_fixtures, reproduce_table
from .upsilon import GENERATION_CEILING, SizeLimitError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFY = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselzeros",
        description="Uniform asymptotic approximation of Bessel function zeros.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a coefficient cache file")
    gen.add_argument("--family", choices=["j", "jprime"], required=True)
    gen.add_argument("--max-order", type=int, required=True, metavar="S")
    gen.add_argument("--out", required=True, metavar="PATH")

    zero = sub.add_parser("zero", help="approximate the m-th zero")
    zero.add_argument("--family", choices=["j", "y", "jprime"], required=True)
    zero.add_argument("--nu", required=True, help="order nu > 0 (decimal)")
    zero.add_argument("--m", type=int, required=True, help="zero index m >= 1")
    zero.add_argument("--terms", type=int, default=4, metavar="S")
    zero.add_argument("--digits", type=int, default=None, metavar="D")
    zero.add_argument("--json", action="store_true", help="machine-readable output")

    table = sub.add_parser("table", help="reproduce a reference residual grid")
    table.add_argument("--which", type=int, choices=[1, 2], required=True)
    table.add_argument("--digits", type=int, default=None, metavar="D")
    table.add_argument("--fixtures", default=None, metavar="PATH")

    airy = sub.add_parser("airy", help="print a negative Airy-function zero")
    airy.add_argument("--kind", choices=["a", "b", "aprime"], required=True)
    airy.add_argument("--m", type=int, required=True)
    airy.add_argument("--digits", type=int, default=None, metavar="D")

    return parser


def _cmd_gen(args, parser) -> int:
    if not 1 <= args.max_order <= GENERATION_CEILING:
        parser.error(f"--max-order must be in 1..{GENERATION_CEILING}")
    family = Family.STANDARD if args.family == "j" else Family.DERIVATIVE
    cache.write_cache(args.out, family, args.max_order)
    print(f"wrote {args.family} coefficients through order {args.max_order} to {args.out}")
    return EXIT_OK


def _cmd_zero(args, parser) -> int:
    if args.m < 1:
        parser.error("--m must be >= 1")
    if args.terms < 0:
        parser.error("--terms must be >= 0")
    digits = args.digits if args.digits is not None else default_digits()
    try:
        nu_ok = float(args.nu) > 0
    except ValueError:
        nu_ok = False
    if not nu_ok:
        parser.error("--nu must be a positive number")
    family = ZeroFamily(args.family)
    result = zero_expansion(family, args.nu, args.m, args.terms, digits)
    if args.json:
        payload = {
            "family": family.value,
            "nu": to_string(result.nu, digits),
            "m": result.m,
            "terms": result.terms,
            "digits": digits,
            "z": to_string(result.z, digits),
            "x": to_string(result.x, digits),
            "partial_sums": [to_string(v, digits) for v in result.partial_sums],
            "coefficients": [to_string(v, digits) for v in result.coefficients],
            "turning_point_gap": to_string(result.turning_point_gap, digits),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"family {family.value}  nu {to_string(result.nu, digits)}  m {result.m}"
          f"  terms {result.terms}  digits {digits}")
    print(f"  z = {to_string(result.z, digits)}")
    print(f"  x = nu z = {to_string(result.x, digits)}")
    print(f"  turning-point gap z0 - 1 = {to_string(result.turning_point_gap, 6)}")
    for s, value in enumerate(result.partial_sums):
        print(f"  partial sum S={s}: {to_string(value, digits)}")
    for s, value in enumerate(result.coefficients, start=1):
        print(f"  coefficient s={s}: {to_string(value, digits)}")
    return EXIT_OK


def _cmd_table(args, parser) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    fixtures = load_fixtures(args.fixtures)
    report = reproduce_table(args.which, digits, fixtures)
    print(report.format_text())
    if not report.all_ok:
        failures = [c for c in report.cells if not c.ok]
        print(f"{len(failures)} of {len(report.cells)} cells failed")
        return EXIT_VERIFY
    print("all cells within tolerance")
    return EXIT_OK


def _cmd_airy(args, parser) -> int:
    if args.m < 1:
        parser.error("--m must be >= 1")
    digits = args.digits if args.digits is not None else default_digits()
    value = airy_zero(AiryZeroKind(args.kind), args.m, digits)
    print(to_string(value, digits))
    return EXIT_OK


_HANDLERS = {"gen": _cmd_gen, "zero": _cmd_zero, "table": _cmd_table, "airy": _cmd_airy}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args, parser)
    except (BracketError, PrecisionError, SizeLimitError, FixtureMissingError,
            ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
