"""Human-readable renderings of the report dictionaries"""

from typing import Any, Dict, List

from ..properness.probe import PROBE_COLUMNS
from ..utils.rationals import format_complex

VERDICT_LABELS = {"proper": "PROPER", "not_proper": "NOT PROPER"}


def _header(report: Dict[str, Any]) -> List[str]:
    lines = [f"quiver-moment {report['command']} {report['path']}"]
    if "applied_settings" in report:
        lines.append(f"seed: {report['applied_settings']['seed']}")
    return lines


def _number(value: float) -> str:
    return f"{value:.6g}"


def render_validation(report: Dict[str, Any]) -> str:
    lines = _header(report)
    if report["valid"]:
        lines.append(f"valid: {report['vertex_count']} vertices, {report['arrow_count']} arrows")
    else:
        lines.append(f"invalid: {len(report['violations'])} violation(s)")
        lines.extend(f"  - {violation}" for violation in report["violations"])
    return "\n".join(lines) + "\n"


def render_probe_csv(rows: List[Dict[str, Any]]) -> str:
    """Probe table as CSV, ready for external plotting."""
    lines = [",".join(PROBE_COLUMNS)]
    for row in rows:
        witness = row["witness_moment_norm"]
        lines.append(
            f"{row['radius']!r},{row['samples']},{row['min_moment_norm']!r},{row['max_moment_norm']!r},"
            f"{'' if witness is None else repr(witness)}"
        )
    return "\n".join(lines) + "\n"


def render_analysis(report: Dict[str, Any]) -> str:
    lines = _header(report)
    verdict = VERDICT_LABELS[report["verdict"]]
    lines.append(f"verdict: {verdict} ({report['reason']})")
    lines.append(f"quotient verdict: {VERDICT_LABELS[report['quotient_verdict']]}")
    if report["support_generalized"]:
        lines.append(f"support: {' '.join(report['support']['vertices'])} (zero-dimensional vertices dropped)")

    witness = report["witness"]
    if witness is not None:
        lines.append(f"cycle: {' '.join(witness['cycle'])}")
        lines.append(f"witness: {witness['generator']}")
        lines.append(f"||rho(n)||^2 = {witness['norm_squared']}, Phi(rho(n)) = Phi(0) for all n")
        check = report.get("witness_check")
        if check is not None:
            status = "ok" if check["constant"] else "FAILED"
            lines.append(
                f"constancy check: max deviation {_number(check['max_deviation'])} over n in "
                f"{', '.join(_number(n) for n in check['n_values'])} (tolerance {check['tolerance']!r}): {status}"
            )

    certificate = report["certificate"]
    if certificate is not None:
        lines.append(f"certificate: {certificate['mode']} peeling ({certificate['label']})")
        lines.append(f"  {'step':<5}{'vertex':<10}{'arrows':<20}{'c0':>14}{'c1':>14}")
        for number, step in enumerate(certificate["peel_order"], start=1):
            lines.append(
                f"  {number:<5}{step['vertex']:<10}{' '.join(step['arrows']):<20}"
                f"{_number(step['bound']['constant']):>14}{_number(step['bound']['slope']):>14}"
            )
        lines.append(certificate["radius_formula"])
        for sample in report["radius_samples"]:
            line = f"R({sample['m']:g}) = {_number(sample['radius'])}"
            if sample.get("kronecker_radius") is not None:
                line += f"  (Kronecker bound: {_number(sample['kronecker_radius'])})"
            lines.append(line)
        if certificate["infeasible_below"] is not None:
            lines.append(f"no rho has ||Phi(rho)|| < {_number(certificate['infeasible_below'])}")

    text = "\n".join(lines) + "\n"
    if "probe" in report:
        text += "\n" + render_probe_csv(report["probe"])
    return text


def render_verification(report: Dict[str, Any]) -> str:
    lines = _header(report)
    lines.append(f"trials: {report['trials']}")
    if report["vacuous"]:
        lines.append("warning: zero trials, every check passes vacuously")
    for check in report["checks"]:
        status = "ok" if check["passed"] else "FAIL"
        lines.append(
            f"  {check['check']:<20}worst residual {check['worst_residual']:.3e}  "
            f"(ratio {check['worst_ratio']:.3e})  {status}"
        )
    lines.append("result: " + ("pass" if report["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


def render_moment(report: Dict[str, Any]) -> str:
    lines = [f"quiver-moment moment {report['path']} --rep {report['rep_path']}"]
    for vertex, block in report["moment"].items():
        d = block["dim"]
        lines.append(f"L[{vertex}] ({d}x{d}):")
        entries = [complex(re, im) for re, im in block["entries"]]
        for row in range(d):
            lines.append("  " + " ".join(format_complex(z) for z in entries[row * d:(row + 1) * d]))
    lines.append(f"moment_norm: {report['moment_norm']!r}")
    return "\n".join(lines) + "\n"
