#!/usr/bin/env python3
"""
quiver-moment command line.

    quiver-moment validate FILE [--json]
    quiver-moment analyze FILE [--json] [--probe R1,R2,...] [--samples N] [--seed S] [--per-arrow]
    quiver-moment verify FILE [--trials N] [--seed S] [--json]
    quiver-moment moment FILE --rep REPFILE [--json]
    quiver-moment serve

Exit codes are a stable contract: 0 success (or proper), 1 a check failed
(or the file is invalid), 2 input error, 3 not proper.
"""

from typing import Any, Dict, List, Optional, Sequence, TextIO
import argparse
import json
import logging
import sys

from .moment.moment_map import moment
from .properness.analysis import analyze
from .properness.probe import probe
from .quiver.model import ensure_valid, validate
from .reports import (
    build_analysis_report,
    build_moment_report,
    build_validation_report,
    build_verification_report,
    render_analysis,
    render_moment,
    render_validation,
    render_verification,
)
from .specfile import QuiverSpec, load_rep, load_spec
from .utils.errors import InvalidInputError, QuiverError
from .verification import run_identity_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NOT_PROPER = 3

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _emit(report: Dict[str, Any], as_json: bool, render, out: TextIO) -> None:
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(render(report))


def _input_error(e: Exception, err: TextIO) -> int:
    logger.error(f"Input error: {e}")
    err.write(f"error: {e}\n")
    if isinstance(e, InvalidInputError):
        for violation in e.violations:
            err.write(f"  - {violation}\n")
    return EXIT_INPUT_ERROR


def _load_valid(path: str) -> QuiverSpec:
    spec = load_spec(path)
    ensure_valid(spec.quiver, spec.dims, spec.weight)
    return spec


def cmd_validate(path: str, as_json: bool = False, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Exit 0 iff the file parses and validate() finds nothing; 1 lists every violation."""
    out, err = out or sys.stdout, err or sys.stderr
    try:
        spec = load_spec(path)
    except (OSError, ValueError) as e:
        return _input_error(e, err)
    violations = validate(spec.quiver, spec.dims, spec.weight)
    _emit(build_validation_report(spec, violations), as_json, render_validation, out)
    return EXIT_CHECK_FAILED if violations else EXIT_OK


def cmd_analyze(
    path: str,
    as_json: bool = False,
    probe_radii: Optional[Sequence[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    per_arrow: bool = False,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Print the properness report; exit 0 if proper, 3 if not."""
    out, err = out or sys.stdout, err or sys.stderr
    try:
        spec = _load_valid(path)
        settings = spec.settings({"seed": seed, "samples": samples})
    except (OSError, ValueError) as e:
        return _input_error(e, err)

    try:
        report = analyze(spec.quiver, spec.dims, spec.weight, per_arrow=per_arrow)
        rows = None
        if probe_radii:
            rows = probe(spec.quiver, spec.dims, spec.weight, probe_radii, settings.samples, settings.seed, settings)
    except QuiverError as e:
        return _input_error(e, err)
    _emit(build_analysis_report(spec, report, settings, rows), as_json, render_analysis, out)
    return EXIT_OK if report.proper else EXIT_NOT_PROPER


def cmd_verify(
    path: str,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    as_json: bool = False,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Run the identity suite; exit 0 iff every worst residual is within tolerance."""
    out, err = out or sys.stdout, err or sys.stderr
    try:
        spec = _load_valid(path)
        settings = spec.settings({"seed": seed, "trials": trials})
    except (OSError, ValueError) as e:
        return _input_error(e, err)

    try:
        summary = run_identity_suite(spec.quiver, spec.dims, spec.weight, settings=settings)
    except QuiverError as e:
        return _input_error(e, err)
    if summary.vacuous:
        err.write("warning: zero trials, nothing was checked\n")
    _emit(build_verification_report(spec, summary, settings), as_json, render_verification, out)
    return EXIT_OK if summary.passed else EXIT_CHECK_FAILED


def cmd_moment(
    path: str,
    rep_path: str,
    as_json: bool = False,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Print L_theta(rho) per vertex and ||Phi(rho)||^2 for the matrices in ``rep_path``."""
    out, err = out or sys.stdout, err or sys.stderr
    try:
        spec = _load_valid(path)
        settings = spec.settings()
        rho = load_rep(rep_path, spec.quiver, spec.dims)
    except (OSError, ValueError) as e:
        return _input_error(e, err)

    try:
        value = moment(rho, spec.weight)
        report = build_moment_report(spec, rho, value, value.norm_squared(settings), str(rep_path))
    except QuiverError as e:
        return _input_error(e, err)
    _emit(report, as_json, render_moment, out)
    return EXIT_OK


def parse_radii(text: str) -> List[float]:
    """``--probe`` value: comma-separated non-negative radii."""
    try:
        radii = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"radii must be comma-separated numbers, got '{text}'")
    if not radii or any(r < 0 for r in radii):
        raise argparse.ArgumentTypeError(f"radii must be non-negative, got '{text}'")
    return radii


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiver-moment",
        description="Moment maps of quiver representations and properness certificates.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level for messages on stderr.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("validate", help="Check a quiver file against every invariant.")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="Emit the machine-readable report.")

    p = commands.add_parser("analyze", help="Decide properness and print the witness or certificate.")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="Emit the machine-readable report.")
    p.add_argument("--probe", type=parse_radii, default=None, metavar="R1,R2,...",
                   help="Also sample ||Phi||^2 on spheres of these radii.")
    p.add_argument("--samples", type=int, default=None, help="Samples per probe radius.")
    p.add_argument("--seed", type=int, default=None, help="Random seed (printed in the report).")
    p.add_argument("--per-arrow", action="store_true", help="Peel one arrow per certificate step.")

    p = commands.add_parser("verify", help="Run the moment-map identity suite on random data.")
    p.add_argument("path")
    p.add_argument("--trials", type=int, default=None, help="Number of random trials.")
    p.add_argument("--seed", type=int, default=None, help="Random seed (printed in the report).")
    p.add_argument("--json", action="store_true", help="Emit the machine-readable report.")

    p = commands.add_parser("moment", help="Evaluate the moment map at a representation.")
    p.add_argument("path")
    p.add_argument("--rep", required=True, help="Representation matrix file.")
    p.add_argument("--json", action="store_true", help="Emit the machine-readable report.")

    commands.add_parser("serve", help="Run the MCP tool server over stdio.")
    return parser


def configure_logging(level: str) -> None:
    """stderr logging for the CLI; the MCP server logs to a file instead."""
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        from .server import main as serve
        serve()
        return EXIT_OK

    configure_logging(args.log_level)
    if args.command == "validate":
        return cmd_validate(args.path, as_json=args.json)
    if args.command == "analyze":
        return cmd_analyze(
            args.path, as_json=args.json, probe_radii=args.probe,
            samples=args.samples, seed=args.seed, per_arrow=args.per_arrow,
        )
    if args.command == "verify":
        return cmd_verify(args.path, trials=args.trials, seed=args.seed, as_json=args.json)
    return cmd_moment(args.path, args.rep, as_json=args.json)


if __name__ == "__main__":
    sys.exit(main())
