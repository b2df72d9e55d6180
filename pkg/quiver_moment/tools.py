"""
MCP tools.

Each tool takes the text of a quiver file (and, for compute_moment, of a
representation file), runs one command's computation and returns the same
JSON-compatible report the CLI prints with ``--json``, tagged
``"status": "success"``. Any failure comes back as the structured
``handle_error`` response instead of an exception.
"""

from typing import Any, Dict, List, Optional
import logging

from .app import mcp
from .moment.moment_map import moment
from .properness.analysis import analyze
from .properness.probe import probe
from .quiver.model import ensure_valid, validate
from .reports import (
    build_analysis_report,
    build_moment_report,
    build_validation_report,
    build_verification_report,
)
from .specfile import QuiverSpec, parse_rep_text, parse_spec_text
from .utils.errors import handle_error
from .verification import run_identity_suite

logger = logging.getLogger(__name__)


def _parse_valid(spec_text: str) -> QuiverSpec:
    spec = parse_spec_text(spec_text)
    ensure_valid(spec.quiver, spec.dims, spec.weight)
    return spec


@mcp.tool()
def validate_quiver(spec_text: str) -> Dict[str, Any]:
    """
    Checks a quiver description against every invariant.

    Args:
        spec_text: Quiver file text with [vertices] lines 'id dim theta'
                   (theta an integer or p/q), [arrows] lines 'id src tgt'
                   and an optional [options] section.

    Returns:
        Validation report with 'valid' and the list of 'violations'.
    """
    try:
        spec = parse_spec_text(spec_text)
        result = build_validation_report(spec, validate(spec.quiver, spec.dims, spec.weight))
        result["status"] = "success"
        return result
    except Exception as e:
        logger.error(f"Error validating quiver: {str(e)}")
        return handle_error(e)


@mcp.tool()
def analyze_quiver(
    spec_text: str,
    probe_radii: Optional[List[float]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    per_arrow: bool = False,
) -> Dict[str, Any]:
    """
    Decides whether the moment map of the quiver is proper.

    Not proper when the support (vertices with positive dimension) has a
    cycle: the report then gives the cycle and an unbounded witness family
    with constant moment value. Proper when the support is acyclic: the
    report then gives a coercivity certificate, a radius R(M) such that
    ||Phi(rho)|| <= M implies ||rho|| <= R(M).

    Args:
        spec_text: Quiver file text
        probe_radii: Optional radii at which to sample ||Phi||^2
        samples: Samples per probe radius (default from settings)
        seed: Random seed for the probe (default from settings)
        per_arrow: Peel one arrow per certificate step

    Returns:
        Properness report with 'verdict' ('proper' or 'not_proper').
    """
    try:
        logger.info(f"Analyzing quiver (probe radii: {probe_radii})")
        spec = _parse_valid(spec_text)
        settings = spec.settings({"seed": seed, "samples": samples})
        report = analyze(spec.quiver, spec.dims, spec.weight, per_arrow=per_arrow)
        rows = None
        if probe_radii:
            if any(r < 0 for r in probe_radii):
                raise ValueError(f"Probe radii must be non-negative, got {probe_radii}")
            rows = probe(spec.quiver, spec.dims, spec.weight, probe_radii, settings.samples, settings.seed, settings)
        result = build_analysis_report(spec, report, settings, rows)
        result["status"] = "success"
        return result
    except Exception as e:
        logger.error(f"Error analyzing quiver: {str(e)}")
        return handle_error(e)


@mcp.tool()
def verify_moment_identities(
    spec_text: str,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Runs the moment-map identity suite on seeded random data over the quiver.

    Args:
        spec_text: Quiver file text
        trials: Number of random trials (default from settings)
        seed: Random seed (default from settings)

    Returns:
        Worst residual per check and an overall 'passed' flag.
    """
    try:
        spec = _parse_valid(spec_text)
        settings = spec.settings({"seed": seed, "trials": trials})
        summary = run_identity_suite(spec.quiver, spec.dims, spec.weight, settings=settings)
        result = build_verification_report(spec, summary, settings)
        result["status"] = "success"
        return result
    except Exception as e:
        logger.error(f"Error verifying identities: {str(e)}")
        return handle_error(e)


@mcp.tool()
def compute_moment(spec_text: str, rep_text: str) -> Dict[str, Any]:
    """
    Evaluates the moment map at a representation.

    Args:
        spec_text: Quiver file text
        rep_text: Representation file text: per arrow, its id on a line
                  followed by d_target rows of d_source entries 'a+bi'

    Returns:
        L_theta(rho) per vertex (row-major [re, im] entries) and moment_norm.
    """
    try:
        spec = _parse_valid(spec_text)
        settings = spec.settings()
        rho = parse_rep_text(rep_text, spec.quiver, spec.dims)
        value = moment(rho, spec.weight)
        result = build_moment_report(spec, rho, value, value.norm_squared(settings))
        result["status"] = "success"
        return result
    except Exception as e:
        logger.error(f"Error computing moment: {str(e)}")
        return handle_error(e)
