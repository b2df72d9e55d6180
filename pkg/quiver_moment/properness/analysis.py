"""
Properness verdict.

Phi is proper exactly when the support subquiver (vertices with d_a > 0)
is acyclic. A cycle in the support yields a witness family; an acyclic
support yields a coercivity certificate. The quotient moment map of
K/(H cap K) differs from Phi by an injective linear map with closed image,
so it gets the same verdict.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional
import logging

from ..quiver.graph import find_cycle, support_subquiver
from ..quiver.model import DimensionVector, Quiver, Weight, ensure_valid
from ..utils.errors import QuiverError
from .certificate import CoercivityCertificate, make_certificate
from .witness import CycleWitness, make_witness

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    PROPER = "proper"
    NOT_PROPER = "not_proper"


class Reason(str, Enum):
    ACYCLIC_SUPPORT = "acyclic-support"
    CYCLE_FOUND = "cycle-found"


@dataclass(frozen=True, eq=False)
class PropernessReport:
    """Verdict with exactly one of witness / certificate attached."""

    verdict: Verdict
    reason: Reason
    quiver: Quiver
    dims: DimensionVector
    weight: Weight
    support: Quiver
    witness: Optional[CycleWitness] = None
    certificate: Optional[CoercivityCertificate] = None

    def __post_init__(self):
        has_witness = self.witness is not None
        has_certificate = self.certificate is not None
        if has_witness == has_certificate or has_witness != (self.verdict is Verdict.NOT_PROPER):
            raise QuiverError("report needs exactly one of witness/certificate, matching the verdict")

    @property
    def proper(self) -> bool:
        return self.verdict is Verdict.PROPER

    @property
    def quotient_verdict(self) -> Verdict:
        """Verdict for the moment map of K/(H cap K); always equal to the verdict for Phi."""
        return self.verdict

    @property
    def support_generalized(self) -> bool:
        """True when some d_a = 0, so the verdict was decided on a proper subquiver."""
        return len(self.support.vertices) != len(self.quiver.vertices)


def analyze(
    quiver: Quiver,
    dims: DimensionVector,
    weight: Weight,
    per_arrow: bool = False,
) -> PropernessReport:
    """
    Decide properness of the moment map and attach its evidence.

    Args:
        per_arrow: Build the certificate one arrow per peel step

    Raises:
        InvalidInputError: If the inputs violate an invariant
    """
    ensure_valid(quiver, dims, weight)
    support = support_subquiver(quiver, dims)
    if len(support.vertices) != len(quiver.vertices):
        logger.warning(
            "Dimension vector has zeros; properness is decided on the support subquiver "
            f"({len(support.vertices)} of {len(quiver.vertices)} vertices)"
        )

    cycle = find_cycle(support)
    if cycle is not None:
        logger.info(f"Not proper: cycle {' '.join(cycle.arrows)} in the support")
        return PropernessReport(
            Verdict.NOT_PROPER, Reason.CYCLE_FOUND, quiver, dims, weight, support,
            witness=make_witness(support, dims, weight, cycle),
        )

    logger.info("Proper: the support is acyclic")
    return PropernessReport(
        Verdict.PROPER, Reason.ACYCLIC_SUPPORT, quiver, dims, weight, support,
        certificate=make_certificate(support, dims, weight, per_arrow=per_arrow),
    )
