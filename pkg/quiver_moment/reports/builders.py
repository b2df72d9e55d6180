"""JSON-compatible report dictionaries for each command"""

from typing import Any, Dict, List, Optional, Sequence

from ..moment.moment_map import MomentValue
from ..properness.analysis import PropernessReport
from ..properness.bounds import kronecker_coefficients, kronecker_radius, kronecker_vertices
from ..properness.probe import ProbeRow
from ..properness.witness import CONSTANCY_SAMPLES
from ..repspace.points import RepPoint
from ..specfile import QuiverSpec
from ..utils.rationals import format_rational
from ..utils.settings import QuiverSettings, build_applied_settings
from ..verification import VerificationSummary

# M values at which radii are tabulated in reports
RADIUS_SAMPLES = (0.1, 1.0, 10.0)


def complex_pair(z: complex) -> List[float]:
    """A complex number as ``[re, im]``."""
    return [float(z.real), float(z.imag)]


def build_quiver_section(spec: QuiverSpec) -> Dict[str, Any]:
    """The input triple of a valid spec, echoed in the analyze report."""
    return {
        "vertices": [
            {"id": v, "dim": spec.dims[v], "theta": format_rational(spec.weight[v])}
            for v in spec.quiver.vertices
        ],
        "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in spec.quiver.arrows],
    }


def build_validation_report(spec: QuiverSpec, violations: Sequence[str]) -> Dict[str, Any]:
    return {
        "command": "validate",
        "path": spec.path,
        "valid": not violations,
        "violations": list(violations),
        "vertex_count": len(spec.quiver.vertices),
        "arrow_count": len(spec.quiver.arrows),
    }


def build_radius_samples(report: PropernessReport, sample_m: Sequence[float] = RADIUS_SAMPLES) -> List[Dict[str, Any]]:
    """R(M) at a few M, with the Kronecker radius alongside when it applies."""
    certificate = report.certificate
    kronecker = kronecker_vertices(report.support) is not None
    samples = []
    for m in sample_m:
        row: Dict[str, Any] = {"m": m, "radius": certificate.radius(m)}
        if kronecker:
            row["kronecker_radius"] = kronecker_radius(report.support, report.dims, report.weight, m)
        samples.append(row)
    return samples


def build_analysis_report(
    spec: QuiverSpec,
    report: PropernessReport,
    settings: QuiverSettings,
    probe_rows: Optional[Sequence[ProbeRow]] = None,
) -> Dict[str, Any]:
    """
    Analyze output: verdict, reason and the evidence for it.

    Exactly one of ``witness`` / ``certificate`` is non-null. The certificate
    carries its (c0, c1) schedule so R(M) can be recomputed from the JSON.
    """
    result: Dict[str, Any] = {
        "command": "analyze",
        "path": spec.path,
        "seed": settings.seed,
        "quiver": build_quiver_section(spec),
        "verdict": report.verdict.value,
        "reason": report.reason.value,
        "quotient_verdict": report.quotient_verdict.value,
        "support_generalized": report.support_generalized,
        "support": {
            "vertices": list(report.support.vertices),
            "arrows": [arrow.id for arrow in report.support.arrows],
        },
        "witness": report.witness.to_dict() if report.witness is not None else None,
        "certificate": report.certificate.to_dict() if report.certificate is not None else None,
    }
    if report.witness is not None:
        deviation = report.witness.constancy_deviation()
        result["witness_check"] = {
            "n_values": list(CONSTANCY_SAMPLES),
            "max_deviation": deviation,
            "tolerance": settings.witness_atol,
            "constant": deviation <= settings.witness_atol,
        }
    if report.certificate is not None:
        result["radius_samples"] = build_radius_samples(report)
        if kronecker_vertices(report.support) is not None:
            quartic, quadratic, constant = kronecker_coefficients(report.support, report.dims, report.weight)
            result["kronecker_bound"] = {"quartic": quartic, "quadratic": quadratic, "constant": constant}
    if probe_rows is not None:
        result["probe"] = [row.to_dict() for row in probe_rows]
    result["applied_settings"] = build_applied_settings(settings)
    return result


def build_verification_report(spec: QuiverSpec, summary: VerificationSummary, settings: QuiverSettings) -> Dict[str, Any]:
    result = {"command": "verify", "path": spec.path}
    result.update(summary.to_dict())
    result["applied_settings"] = build_applied_settings(settings)
    return result


def build_moment_report(
    spec: QuiverSpec,
    rho: RepPoint,
    value: MomentValue,
    moment_norm: float,
    rep_path: str = "<input>",
) -> Dict[str, Any]:
    """L_theta(rho) per vertex as row-major ``[re, im]`` entries, plus ||Phi(rho)||^2."""
    return {
        "command": "moment",
        "path": spec.path,
        "rep_path": rep_path,
        "rep_norm_squared": rho.norm_squared(),
        "moment": {
            vertex: {"dim": spec.dims[vertex], "entries": entries}
            for vertex, entries in value.to_dict().items()
        },
        "moment_norm": moment_norm,
        "central_trace": complex_pair(value.central_trace()),
    }
