"""Command-line entry point: ``lambshift --atom H --mode analytic``."""

from __future__ import annotations

import argparse
import sys

from .constants import ConfigError, PhysicalConstants, atom_from_constants
from .pipeline import ANALYTIC, MODES, QUADRATURE, SEMIEMPIRICAL, full_report, to_csv, to_json, to_table
from .quadrature import QuadratureConfig

EXIT_OK, EXIT_USAGE, EXIT_CONVERGENCE = 0, 1, 2

_MODE_FLAGS = {"semiempirical": (SEMIEMPIRICAL,), "analytic": (ANALYTIC,),
               "quadrature": (QUADRATURE,), "all": MODES}


class _Parser(argparse.ArgumentParser):
    # argparse's own status 2 is reserved for convergence failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lambshift", description="Noncovariant Lamb-shift predictions for H and D.")
    p.add_argument("--atom", choices=("H", "D", "all"), default="all")
    p.add_argument("--mode", choices=tuple(_MODE_FLAGS), default="all")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--config", help="JSON file overriding physical constants")
    p.add_argument("--tolerance", type=float, default=1e-10,
                   help="relative quadrature tolerance (default 1e-10)")
    p.add_argument("--verbose", action="store_true",
                   help="include all coefficients and both mass-bracket prescriptions")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        constants = PhysicalConstants.from_json(args.config) if args.config else PhysicalConstants()
        quad = QuadratureConfig(relative_tolerance=args.tolerance)
    except (ConfigError, ValueError) as exc:
        print(f"lambshift: {exc}", file=sys.stderr)
        return EXIT_USAGE

    names = ("H", "D") if args.atom == "all" else (args.atom,)
    atoms = [atom_from_constants(constants, n) for n in names]
    reports = full_report(atoms, _MODE_FLAGS[args.mode], quad, verbose=args.verbose)

    if args.format == "json":
        sys.stdout.write(to_json(reports))
    elif args.format == "csv":
        sys.stdout.write(to_csv(reports))
    else:
        sys.stdout.write(to_table(reports, verbose=args.verbose))

    if any(r.failed for r in reports):
        for r in reports:
            if r.failed:
                print(f"lambshift: {r.atom} {r.state} {r.mode}: {r.diagnostics['error']}",
                      file=sys.stderr)
        return EXIT_CONVERGENCE
    return EXIT_OK
