"""
Coercivity certificates for acyclic supports.

The certificate peels source vertices off the quiver one at a time. Each
vertex b keeps a budget M_b(M), an affine upper bound on ||Psi(rho)_b||
for the moment map Psi of the quiver still left, given ||Phi(rho)|| <= M.
At a source vertex the moment value is i(lambda_b I - sum_out rho^H rho),
and the trace inequality n tr(A^2) >= (tr A)^2 turns the budget into

    sum_out ||rho_alpha||^2 <= S_b(M) = max(0, lambda_b d_b + sqrt(d_b) M_b(M)).

Deleting b's outgoing arrows changes the moment value at each target c by
the positive semidefinite rho rho^H, whose Frobenius norm is at most its
trace, so M_c grows by at most S_b. Finally

    ||rho||^2 <= R(M)^2 = sum of S_b(M) over the peel steps.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import math

from ..moment.slope import slope
from ..quiver.graph import find_cycle, find_source_arrow
from ..quiver.model import DimensionVector, Quiver, Weight
from ..utils.errors import CyclicQuiverError

logger = logging.getLogger(__name__)

CERTIFICATE_LABEL = "sound, not tight"


@dataclass(frozen=True)
class AffineBound:
    """c0 + c1 * M."""

    constant: float
    slope: float

    def __call__(self, m: float) -> float:
        return self.constant + self.slope * m

    def __add__(self, other: "AffineBound") -> "AffineBound":
        return AffineBound(self.constant + other.constant, self.slope + other.slope)

    def as_pair(self) -> Tuple[float, float]:
        return (self.constant, self.slope)


@dataclass(frozen=True)
class PeelStep:
    """One peel: source vertex, the arrows deleted, and the bound S_b."""

    vertex: str
    arrows: Tuple[str, ...]
    budget: AffineBound
    bound: AffineBound
    infeasible_below: Optional[float] = None

    def value(self, m: float) -> float:
        """S_b(M), clamped at zero."""
        return max(0.0, self.bound(m))


@dataclass(frozen=True)
class CoercivityCertificate:
    """
    Phi^-1({||.|| <= M}) is contained in {||rho|| <= R(M)}.

    R is nondecreasing in M. ``infeasible_below`` is M* such that the
    preimage of the M-ball is empty for every M < M*, when a peel step
    proves it.
    """

    peel_order: Tuple[PeelStep, ...]
    infeasible_below: Optional[float] = None
    per_arrow: bool = False
    label: str = CERTIFICATE_LABEL

    def radius(self, m: float) -> float:
        """R(M)."""
        return math.sqrt(sum(step.value(m) for step in self.peel_order))

    __call__ = radius

    def schedule(self) -> List[Tuple[float, float]]:
        """(c0, c1) of each S_b, in peel order."""
        return [step.bound.as_pair() for step in self.peel_order]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "mode": "per-arrow" if self.per_arrow else "per-vertex",
            "peel_order": [
                {
                    "vertex": step.vertex,
                    "arrows": list(step.arrows),
                    "budget": {"constant": step.budget.constant, "slope": step.budget.slope},
                    "bound": {"constant": step.bound.constant, "slope": step.bound.slope},
                    "infeasible_below": step.infeasible_below,
                }
                for step in self.peel_order
            ],
            "radius_schedule": [list(pair) for pair in self.schedule()],
            "radius_formula": "R(M) = sqrt(sum_k max(0, c0_k + c1_k*M))",
            "infeasible_below": self.infeasible_below,
        }


def radius_from_schedule(schedule: Sequence[Sequence[float]], m: float) -> float:
    """Re-evaluate R(M) from serialized (c0, c1) pairs."""
    return math.sqrt(sum(max(0.0, c0 + c1 * m) for c0, c1 in schedule))


def make_certificate(
    support: Quiver,
    dims: DimensionVector,
    weight: Weight,
    per_arrow: bool = False,
) -> CoercivityCertificate:
    """
    Build a coercivity certificate by peeling source vertices.

    Args:
        support: Acyclic quiver whose vertices all have positive dimension
        per_arrow: Peel one source arrow per step instead of all outgoing
                   arrows of the source vertex; the source vertex's own
                   budget then also grows by S

    Raises:
        CyclicQuiverError: If ``support`` has a cycle
    """
    cycle = find_cycle(support)
    if cycle is not None:
        raise CyclicQuiverError(list(cycle.arrows))

    lambdas = slope(weight, dims).lambdas
    budgets = {vertex: AffineBound(0.0, 1.0) for vertex in support.vertices}
    steps: List[PeelStep] = []
    current = support

    while current.arrows:
        source_arrow = current.arrow(find_source_arrow(current))
        b = source_arrow.src
        peeled = [source_arrow] if per_arrow else current.outgoing(b)

        root = math.sqrt(dims[b])
        budget = budgets[b]
        bound = AffineBound(float(lambdas[b]) * dims[b] + root * budget.constant, root * budget.slope)
        threshold = -bound.constant / bound.slope if bound.constant < 0 else None
        if threshold is not None:
            logger.debug(f"Peel at '{b}' infeasible for M < {threshold:.6g}")

        ids = tuple(arrow.id for arrow in peeled)
        steps.append(PeelStep(b, ids, budget, bound, threshold))
        logger.debug(f"Peel '{b}' arrows {ids}: S = {bound.constant:.6g} + {bound.slope:.6g} M")

        # max(0, c0) + c1 M dominates max(0, c0 + c1 M) for c1 >= 0
        transfer = AffineBound(max(0.0, bound.constant), bound.slope)
        for arrow in peeled:
            budgets[arrow.tgt] = budgets[arrow.tgt] + transfer
        if per_arrow:
            budgets[b] = budgets[b] + transfer
        current = current.without_arrows(ids)

    thresholds = [step.infeasible_below for step in steps if step.infeasible_below is not None]
    certificate = CoercivityCertificate(
        tuple(steps),
        infeasible_below=max(thresholds) if thresholds else None,
        per_arrow=per_arrow,
    )
    logger.info(f"Certificate with {len(steps)} peel step(s), R(1) = {certificate.radius(1.0):.6g}")
    return certificate


def replay_peel_order(support: Quiver, certificate: CoercivityCertificate) -> bool:
    """
    Check the peel order is a valid peeling of ``support``: each step's
    vertex has in-degree 0 when peeled, its arrows leave that vertex, every
    arrow is peeled exactly once, and nothing is left at the end.
    """
    current = support
    for step in certificate.peel_order:
        if current.in_degrees().get(step.vertex, 0) != 0:
            return False
        remaining = {arrow.id: arrow for arrow in current.arrows}
        if not step.arrows or any(
            arrow_id not in remaining or remaining[arrow_id].src != step.vertex for arrow_id in step.arrows
        ):
            return False
        current = current.without_arrows(step.arrows)
    return not current.arrows
