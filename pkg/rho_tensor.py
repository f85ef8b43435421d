#!/usr/bin/env python3
"""
rho-tensor command line.

Parses a Lie type, runs one library command and prints either text tables or
a JSON report. Exit status: 0 when every check passes, 1 when a mathematical
check fails (a counterexample is named in the report), 2 for usage and guard
errors.

Examples:
    python rho_tensor.py roots G2
    python rho_tensor.py tensor A2 --weights 1,1 1,1
    python rho_tensor.py verify-kostant B2 --json
    RHO_TENSOR_MAX_DIM=100000000 python rho_tensor.py verify-all B4
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, NamedTuple, Optional, TextIO

from lie.errors import DomainError, GuardError, InternalCheckError, LieTypeError, WeightError
from lie.kostant import (
    Check,
    conjecture_checks,
    verify_all,
    verify_conjecture,
    verify_root_system,
    verify_saturation,
)
from lie.polytope import vertices, vertices_2rho
from lie.reps import decomposition_mass, dim, tensor_decompose, tensor_multiplicity
from lie.rootsys import RootSystem, algebra_dimension, build_from_label, check_weight, rho, weight_to_root_coords
from lie.settings import Guards, load_guards, log_level
from lie.utils import Weight, format_weight, report_order, scale
from lie.weyl import weyl_group_order
from ui import report as json_report
from ui import tables

logger = logging.getLogger("rho_tensor")

COMMANDS = ("roots", "vertices", "tensor", "verify-kostant", "verify-saturation", "verify-all")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class RunConfig(NamedTuple):
    lie_type: str
    command: str
    json: bool = False
    max_orbit: Optional[int] = None
    max_dim: Optional[int] = None
    allow_large: bool = False
    d: Optional[int] = None
    weights: Optional[List[Weight]] = None


class Outcome(NamedTuple):
    results: object
    checks: List[Check]
    text: str


def parse_weight(text: str) -> Weight:
    """``"1,0,2"`` -> ``(1, 0, 2)``; fundamental coordinates, integers only."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise WeightError(f"Weight literal {text!r} must be comma-separated integers")


def _roots(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    rho_root = weight_to_root_coords(root_system, rho(root_system))
    results = {
        "cartan": root_system.cartan,
        "cartan_inverse": root_system.cartan_inverse,
        "symmetrizer": root_system.symmetrizer,
        "positive_roots": root_system.positive_roots,
        "rho_root_coords": rho_root,
        "weyl_group_order": weyl_group_order(root_system),
        "algebra_dimension": algebra_dimension(root_system),
    }
    text = tables.roots_text(
        f"{root_system.lie_type}: |W| = {results['weyl_group_order']}, dim g = {results['algebra_dimension']}",
        root_system.cartan, root_system.cartan_inverse, root_system.symmetrizer,
        root_system.positive_roots, rho_root,
    )
    return Outcome(results, verify_root_system(root_system), text)


def _vertices(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    closed = vertices_2rho(root_system, guards)
    averaged = vertices(root_system, scale(2, rho(root_system)), guards)
    mismatched = [J for J in report_order(closed) if closed[J] != averaged[J]]
    checks = [
        Check("vertex_count", len(set(closed.values())) == 2 ** root_system.rank, f"{len(closed)} vertices"),
        Check("orbit_average_matches_closed_form", not mismatched,
              "" if not mismatched else f"differs at J={mismatched}"),
    ]
    ordered = {J: closed[J] for J in report_order(closed)}
    return Outcome({"vertices": json_report.vertex_results(ordered)}, checks, tables.vertices_text(ordered))


def _tensor(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    weights = config.weights or []
    if len(weights) not in (2, 3):
        raise DomainError(f"tensor takes two weights (decomposition) or three (one multiplicity), got {len(weights)}")
    lam, mu = (check_weight(root_system, w) for w in weights[:2])
    if len(weights) == 3:
        nu = check_weight(root_system, weights[2])
        c = tensor_multiplicity(root_system, lam, mu, nu, guards)
        results = {"lambda": lam, "mu": mu, "nu": nu, "multiplicity": c}
        return Outcome(results, [], f"c = {c} for {format_weight(nu)} in {format_weight(lam)} x {format_weight(mu)}")

    decomposition = tensor_decompose(root_system, lam, mu, guards)
    dims = {nu: dim(root_system, nu) for nu in decomposition}
    expected_mass = dim(root_system, lam) * dim(root_system, mu)
    checks = [Check("mass_identity", decomposition_mass(root_system, decomposition) == expected_mass,
                    f"sum c dim = {expected_mass}")]
    results = {
        "lambda": lam,
        "mu": mu,
        "components": [
            {"weight": nu, "multiplicity": decomposition[nu], "dim": dims[nu]} for nu in sorted(decomposition)
        ],
    }
    return Outcome(results, checks, tables.decomposition_text(decomposition, dims))


def _verify_kostant(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    report = verify_conjecture(root_system, guards)
    checks = conjecture_checks(root_system, report)
    checks.append(Check("dimension_identity", report.dim_identity_holds,
                        f"sum c dim = 2^{2 * len(root_system.positive_roots)}"))
    return Outcome(json_report.conjecture_results(report), checks, tables.conjecture_text(report))


def _verify_saturation(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    report = verify_saturation(root_system, config.d, guards)
    missing = [format_weight(p.weight) for p in report.points if p.multiplicity < 1]
    checks = [Check("saturation_all_positive", report.all_positive,
                    f"d = {report.d}" + (f"; missing {', '.join(missing)}" if missing else ""))]
    return Outcome(json_report.saturation_results(report), checks, tables.saturation_text(report))


def _verify_all(root_system: RootSystem, config: RunConfig, guards: Guards) -> Outcome:
    report = verify_all(root_system, guards)
    results = {
        "conjecture": json_report.conjecture_results(report.conjecture),
        "runtime_ms": report.runtime_ms,
    }
    return Outcome(results, report.checks, tables.conjecture_text(report.conjecture))


HANDLERS: Dict[str, Callable[[RootSystem, RunConfig, Guards], Outcome]] = {
    "roots": _roots,
    "vertices": _vertices,
    "tensor": _tensor,
    "verify-kostant": _verify_kostant,
    "verify-saturation": _verify_saturation,
    "verify-all": _verify_all,
}


def run(config: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    """Run one command and write its report; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if config.command not in HANDLERS:
            raise DomainError(f"Unknown command {config.command!r}; choose from {', '.join(COMMANDS)}")
        if config.d is not None and config.command != "verify-saturation":
            raise DomainError("--d applies to verify-saturation only")
        root_system = build_from_label(config.lie_type)
        guards = load_guards(
            max_orbit=config.max_orbit,
            max_dim=config.max_dim,
            allow_large=True if config.allow_large else None,
        )
        logger.info(f"{config.command} {root_system.lie_type} with {guards}")
        outcome = HANDLERS[config.command](root_system, config, guards)
    except GuardError as e:
        print(f"❌ guard exceeded: {e}", file=err)
        return EXIT_USAGE
    except (LieTypeError, WeightError, DomainError) as e:
        print(f"❌ {e}", file=err)
        return EXIT_USAGE
    except InternalCheckError as e:
        logger.error(f"Internal consistency check failed: {e}")
        print(f"❌ internal check failed: {e}", file=err)
        return EXIT_CHECK_FAILED

    if config.json:
        envelope = json_report.build_report(str(root_system.lie_type), config.command, outcome.results, outcome.checks)
        print(json_report.dumps(envelope), file=out)
    else:
        print(outcome.text, file=out)
        if outcome.checks:
            print("", file=out)
            print(tables.check_lines(outcome.checks), file=out)
            print(tables.summary_line(outcome.checks), file=out)

    return EXIT_OK if all(c.passed for c in outcome.checks) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rho-tensor",
        description="Exact root-system computations and checks on V(rho) x V(rho)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in COMMANDS:
        sub = subparsers.add_parser(command)
        sub.add_argument("lie_type", help="Simple type such as A2, B3, G2")
        sub.add_argument("--json", action="store_true", help="Emit a JSON report instead of text")
        sub.add_argument("--max-orbit", type=int, help="Orbit and weight-count guard")
        sub.add_argument("--max-dim", type=int, help="Dimension guard for V(lambda)")
        sub.add_argument("--allow-large", action="store_true",
                         help="Allow types past the positive-root ceiling (F4); also lifts the default --max-dim to 2^24")
        if command == "tensor":
            sub.add_argument("--weights", nargs="+", required=True,
                             help="Two or three comma-separated fundamental-weight literals, e.g. 1,1 1,1")
        if command == "verify-saturation":
            sub.add_argument("--d", type=int, help="Saturation factor (default: 1 for A, 2 for B/C, 4 for D)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        lie_type=args.lie_type,
        command=args.command,
        json=args.json,
        max_orbit=args.max_orbit,
        max_dim=args.max_dim,
        allow_large=args.allow_large,
        d=getattr(args, "d", None),
        weights=[parse_weight(w) for w in getattr(args, "weights", None) or []] or None,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=log_level(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = config_from_args(args)
    except WeightError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
