"""
Randomized identity suite over a fixed quiver.

Every trial draws a point rho, a Lie(K) element xi, a tangent vector tau and
a unitary k from its own child seed, then evaluates each identity of the
moment map. A check passes when every trial's residual is within
``identity_rtol`` times that trial's scale (``fd_atol`` for the finite
difference comparison).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import logging

import numpy as np

from .moment.identities import (
    check_equivariance,
    check_hamiltonian,
    check_moment_identity,
    finite_difference_derivative,
    hamiltonian_scale,
    moment_derivative,
    moment_identity_scale,
    point_scale,
    trace_residual,
    within_tolerance,
)
from .moment.moment_map import moment, reduced_moment
from .properness.bounds import kronecker_lower_bound, kronecker_vertices
from .quiver.model import DimensionVector, Quiver, Weight, ensure_valid
from .repspace.sampling import random_point, random_skew, random_unitary
from .utils.settings import DEFAULT_SETTINGS, QuiverSettings

logger = logging.getLogger(__name__)

POINT_RADIUS = 10.0
LIE_NORM = 10.0
TANGENT_RADIUS = 1.0


@dataclass
class CheckResult:
    """Worst residual of one identity over all trials."""

    name: str
    worst_residual: float = 0.0
    worst_ratio: float = 0.0
    trials: int = 0
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, residual: float, tolerance: float) -> None:
        self.trials += 1
        self.worst_residual = max(self.worst_residual, residual)
        if tolerance > 0:
            self.worst_ratio = max(self.worst_ratio, residual / tolerance)
        if not residual <= tolerance:
            self.failures += 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "worst_residual": self.worst_residual,
            "worst_ratio": self.worst_ratio,
            "trials": self.trials,
            "failures": self.failures,
            "passed": self.passed,
        }


@dataclass
class VerificationSummary:
    trials: int
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def vacuous(self) -> bool:
        return self.trials == 0

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "checks": [check.to_dict() for check in self.checks],
        }


def run_identity_suite(
    quiver: Quiver,
    dims: DimensionVector,
    weight: Weight,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> VerificationSummary:
    """
    Run every moment-map identity on ``trials`` seeded random samples.

    Args:
        trials: Number of trials (default ``settings.trials``); zero is a
                vacuous pass
        seed: Root seed (default ``settings.seed``)

    Returns:
        Worst residual per check

    Raises:
        InvalidInputError: If the inputs violate an invariant
    """
    ensure_valid(quiver, dims, weight)
    trials = settings.trials if trials is None else trials
    seed = settings.seed if seed is None else seed

    names = ["moment_identity", "hamiltonian", "finite_difference", "equivariance",
             "trace_centrality", "reduced_moment"]
    kronecker = kronecker_vertices(quiver)
    if kronecker is not None and all(dims[v] >= 1 for v in kronecker):
        names.append("kronecker_bound")
    else:
        kronecker = None
    summary = VerificationSummary(trials, seed, [CheckResult(name) for name in names])

    if trials == 0:
        logger.warning("Zero trials requested: every check passes vacuously")
        return summary

    floor = settings.abs_floor
    for trial_seed in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(trial_seed)
        rho = random_point(quiver, dims, POINT_RADIUS * rng.random(), rng)
        xi = random_skew(quiver, dims, rng, norm=LIE_NORM * rng.random())
        tau = random_point(quiver, dims, TANGENT_RADIUS * rng.random(), rng)
        k = random_unitary(quiver, dims, rng)

        scale = moment_identity_scale(rho, xi)
        summary.check("moment_identity").record(
            check_moment_identity(rho, xi, weight, settings),
            max(settings.identity_rtol * scale, floor),
        )

        scale = hamiltonian_scale(rho, xi, tau)
        summary.check("hamiltonian").record(
            check_hamiltonian(rho, xi, tau, weight, settings),
            max(settings.identity_rtol * scale, floor),
        )
        exact = moment_derivative(rho, xi, tau, settings)
        approximate = finite_difference_derivative(rho, xi, tau, weight, settings=settings)
        summary.check("finite_difference").record(abs(exact - approximate), settings.fd_atol * (1.0 + abs(exact)))

        scale = point_scale(rho)
        tolerance = max(settings.identity_rtol * scale, floor)
        summary.check("equivariance").record(check_equivariance(rho, k, weight, settings), tolerance)
        summary.check("trace_centrality").record(trace_residual(rho, weight), tolerance)
        summary.check("reduced_moment").record(reduced_moment(rho, weight).distance(moment(rho, weight)), tolerance)

        if kronecker is not None:
            lhs, rhs = kronecker_lower_bound(rho, weight, settings)
            summary.check("kronecker_bound").record(
                max(0.0, rhs - lhs), max(settings.identity_rtol * (1.0 + lhs), floor)
            )

    for check in summary.checks:
        if not check.passed:
            logger.warning(f"Check {check.name} failed in {check.failures} of {check.trials} trial(s)")
    logger.info(f"Identity suite: {trials} trial(s), {'pass' if summary.passed else 'FAIL'}")
    return summary
