"""Sampling probe: observed moment norms on spheres of given radii"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence
import logging
import math

import numpy as np

from ..moment.moment_map import moment_norm
from ..quiver.graph import find_cycle, support_subquiver
from ..quiver.model import DimensionVector, Quiver, Weight
from ..repspace.sampling import random_point
from ..utils.errors import InvalidInputError
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings
from .witness import make_witness

logger = logging.getLogger(__name__)

PROBE_COLUMNS = ("radius", "samples", "min_moment_norm", "max_moment_norm", "witness_moment_norm")


@dataclass(frozen=True)
class ProbeRow:
    """Min and max of ||Phi||^2 over the points drawn at one radius."""

    radius: float
    samples: int
    min_moment_norm: float
    max_moment_norm: float
    witness_moment_norm: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def probe(
    quiver: Quiver,
    dims: DimensionVector,
    weight: Weight,
    radii: Sequence[float],
    samples_per_radius: int,
    seed: Optional[int] = None,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> List[ProbeRow]:
    """
    Draw points with ||rho|| = r in random directions and record the
    smallest and largest ||Phi(rho)||^2 at each radius.

    When the support has a cycle the witness point rho(n), n = r/sqrt(l), is
    added at every radius, so non-properness shows up as a flat minimum.
    Sampling only corroborates a verdict; it proves nothing.

    Each radius gets its own child seed, and each sample its own grandchild,
    so rows are reproducible independently of each other.

    Raises:
        InvalidInputError: If radii are given with fewer than one sample each
    """
    if radii and samples_per_radius < 1:
        raise InvalidInputError([f"samples per radius must be at least 1 when radii are given, got {samples_per_radius}"])
    seed = settings.seed if seed is None else seed
    support = support_subquiver(quiver, dims)
    cycle = find_cycle(support)
    witness = make_witness(support, dims, weight, cycle) if cycle is not None else None

    rows: List[ProbeRow] = []
    radius_seeds = np.random.SeedSequence(seed).spawn(len(radii))
    for radius, radius_seed in zip(radii, radius_seeds):
        values = [
            moment_norm(random_point(quiver, dims, radius, sample_seed), weight, settings=settings)
            for sample_seed in radius_seed.spawn(samples_per_radius)
        ]
        witness_value = None
        if witness is not None:
            point = witness.generate(radius / math.sqrt(len(witness.cycle)))
            witness_value = moment_norm(point, weight, settings=settings)
            values.append(witness_value)
        rows.append(ProbeRow(float(radius), len(values), min(values), max(values), witness_value))
        logger.debug(f"Probe r={radius}: min {rows[-1].min_moment_norm:.6g}, max {rows[-1].max_moment_norm:.6g}")
    return rows
