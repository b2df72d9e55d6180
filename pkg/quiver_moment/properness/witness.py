"""
Witness families for non-properness.

On a cycle through positive-dimensional vertices, the family rho(n) that
puts n in the (1,1) entry of every cycle arrow (zero elsewhere) has
A(rho(n)) = 0: each cycle vertex gains n^2 E_11 from its incoming cycle
arrow and loses the same from its outgoing one. So the moment value is
constant while ||rho(n)|| grows without bound.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence
import logging

import numpy as np

from ..moment.moment_map import MomentValue, moment
from ..quiver.model import DimensionVector, Path, Quiver, Weight
from ..repspace.points import RepPoint
from ..utils.errors import QuiverError
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings

logger = logging.getLogger(__name__)

WITNESS_STYLES = ("corner", "identity")
CONSTANCY_SAMPLES = (1.0, 10.0, 100.0, 1000.0)


@dataclass(frozen=True, eq=False)
class CycleWitness:
    """An unbounded family n -> rho(n) with constant moment value."""

    cycle: Path
    quiver: Quiver
    dims: DimensionVector
    weight: Weight
    base_moment: MomentValue
    style: str = "corner"

    def generate(self, n: float) -> RepPoint:
        """rho(n); arrows off the cycle carry the zero map."""
        mats = {}
        on_cycle = set(self.cycle.arrows)
        for arrow in self.quiver.arrows:
            shape = self.dims.shape(arrow)
            mat = np.zeros(shape, dtype=np.complex128)
            if arrow.id in on_cycle:
                if self.style == "identity":
                    mat = n * np.eye(shape[0], dtype=np.complex128)
                else:
                    mat[0, 0] = n
            mats[arrow.id] = mat
        return RepPoint(self.quiver, self.dims, mats)

    __call__ = generate

    def norm_squared(self, n: float) -> float:
        """Exact ||rho(n)||^2: l n^2 (corner) or d_b n^2 (identity on a loop at b)."""
        if self.style == "identity":
            loop = self.quiver.arrow(self.cycle.arrows[0])
            return self.dims[loop.src] * n * n
        return len(self.cycle) * n * n

    def constancy_deviation(self, ns: Sequence[float] = CONSTANCY_SAMPLES) -> float:
        """Largest componentwise distance of Phi(rho(n)) from Phi(rho(0)) over ``ns``."""
        return max(
            (moment(self.generate(n), self.weight).distance(self.base_moment) for n in ns),
            default=0.0,
        )

    def is_constant(self, settings: QuiverSettings = DEFAULT_SETTINGS, ns: Sequence[float] = CONSTANCY_SAMPLES) -> bool:
        """True when every sampled moment value is within ``witness_atol`` of Phi(0)."""
        return self.constancy_deviation(ns) <= settings.witness_atol

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle": list(self.cycle.arrows),
            "cycle_vertices": self.cycle.vertices(),
            "style": self.style,
            "generator": (
                "rho(n)_alpha = n*I on the loop, 0 elsewhere" if self.style == "identity"
                else "rho(n)_alpha = n*E_11 on cycle arrows, 0 elsewhere"
            ),
            "norm_squared": f"{len(self.cycle)}*n^2" if self.style == "corner"
            else f"{self.norm_squared(1)}*n^2",
            "base_moment": self.base_moment.to_dict(),
        }


def make_witness(
    support: Quiver,
    dims: DimensionVector,
    weight: Weight,
    cycle: Path,
    style: str = "corner",
) -> CycleWitness:
    """
    Build the witness family on ``cycle``.

    Args:
        support: Quiver the cycle lives in (normally the support subquiver)
        style: ``"corner"`` (any cycle) or ``"identity"`` (loops only,
               rho(n) = n*I)

    Raises:
        QuiverError: If the cycle is not a cycle of ``support``, touches a
                     zero-dimensional vertex, or the style does not apply
    """
    if style not in WITNESS_STYLES:
        raise QuiverError(f"Unknown witness style '{style}'. Valid values: {', '.join(WITNESS_STYLES)}")
    bound = Path(tuple(cycle.arrows), support)
    if not bound.is_cycle():
        raise QuiverError(f"cycle not in support: {' '.join(cycle.arrows)}")
    zero = [v for v in bound.vertices() if dims.dims.get(v, 0) < 1]
    if zero:
        raise QuiverError(f"cycle not in support: vertex '{zero[0]}' has dimension 0")
    if style == "identity" and len(bound) != 1:
        raise QuiverError("identity-style witness needs a loop (cycle of length 1)")

    # rho(0) is the zero point
    base = moment(RepPoint.zeros(support, dims), weight)
    logger.info(f"Witness on cycle {' '.join(bound.arrows)} ({style} style)")
    return CycleWitness(bound, support, dims, weight, base, style)
