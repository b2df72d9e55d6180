"""
The moment map of the K-action on the representation space.

    L_theta(rho)_a = i (lambda_a I + A(rho)_a)
    A(rho)_a = sum_{t(alpha)=a} rho_alpha rho_alpha^H - sum_{s(alpha)=a} rho_alpha^H rho_alpha

Lie(K)* is identified with Lie(K) through lie_inner, so the moment value is
the skew-Hermitian family L_theta(rho).
"""

from fractions import Fraction
from typing import Dict, Optional
import logging

import numpy as np

from ..quiver.model import DimensionVector, Weight
from ..repspace.action import lie_inner
from ..repspace.points import LieElement, RepPoint
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings
from .slope import slope

logger = logging.getLogger(__name__)


class MomentValue(LieElement):
    """A moment value L_theta(rho): one skew-Hermitian matrix per vertex."""

    def norm_squared(self, settings: QuiverSettings = DEFAULT_SETTINGS) -> float:
        return lie_inner(self, self, settings)

    def central_trace(self) -> complex:
        """sum_a tr(-i L_a); zero under the slope convention."""
        return -1j * self.trace_sum()


def _zero_blocks(dims: DimensionVector, vertices) -> Dict[str, np.ndarray]:
    return {v: np.zeros((dims[v], dims[v]), dtype=np.complex128) for v in vertices}


def commutator_term(rho: RepPoint) -> Dict[str, np.ndarray]:
    """A(rho)_a: incoming rho rho^H minus outgoing rho^H rho, per vertex."""
    blocks = _zero_blocks(rho.dims, rho.quiver.vertices)
    for arrow in rho.quiver.arrows:
        mat = rho.mats[arrow.id]
        blocks[arrow.tgt] += mat @ mat.conj().T
        blocks[arrow.src] -= mat.conj().T @ mat
    return blocks


def polarization(rho: RepPoint, tau: RepPoint) -> Dict[str, np.ndarray]:
    """B(rho, tau)_a = sum_in rho tau^H - sum_out rho^H tau, so A(rho) = B(rho, rho)."""
    blocks = _zero_blocks(rho.dims, rho.quiver.vertices)
    for arrow in rho.quiver.arrows:
        r, t = rho.mats[arrow.id], tau.mats[arrow.id]
        blocks[arrow.tgt] += r @ t.conj().T
        blocks[arrow.src] -= r.conj().T @ t
    return blocks


def central_element(family, weight: Weight, mu: Optional[Fraction] = None) -> LieElement:
    """eta = (i lambda_a I)_a, the constant part of the moment map."""
    quiver, dims = family.quiver, family.dims
    lambdas = slope(weight, dims, mu).lambdas
    return LieElement(quiver, dims, {v: 1j * float(lambdas[v]) * np.eye(dims[v]) for v in quiver.vertices})


def moment(rho: RepPoint, weight: Weight, mu: Optional[Fraction] = None) -> MomentValue:
    """
    L_theta(rho), the moment value at rho.

    Args:
        rho: Point of the representation space
        weight: Rational weight theta
        mu: Normalizing constant override (default: the slope of theta)

    Returns:
        MomentValue with comps_a = i (lambda_a I + A(rho)_a)
    """
    lambdas = slope(weight, rho.dims, mu).lambdas
    blocks = commutator_term(rho)
    # Hermitian part only: rounding must not leave L_a off Lie(K).
    comps = {
        v: 1j * (float(lambdas[v]) * np.eye(rho.dims[v]) + (blocks[v] + blocks[v].conj().T) / 2)
        for v in rho.quiver.vertices
    }
    return MomentValue(rho.quiver, rho.dims, comps)


def moment_norm(
    rho: RepPoint,
    weight: Weight,
    mu: Optional[Fraction] = None,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """||Phi(rho)||^2 = sum_a ||lambda_a I + A(rho)_a||_F^2."""
    return moment(rho, weight, mu).norm_squared(settings)


def reduced_moment(rho: RepPoint, weight: Weight, mu: Optional[Fraction] = None) -> MomentValue:
    """
    Moment value for the quotient K/(H cap K): the component of L_theta(rho)
    orthogonal to the central line {i c e : c real}.

        comps_a - (sum_b tr comps_b / sum_b d_b) I

    Under the slope convention the correction is zero up to rounding.
    """
    value = moment(rho, weight, mu)
    total_dim = rho.dims.total()
    shift = value.trace_sum() / total_dim if total_dim else 0.0
    if abs(shift) > 0:
        logger.debug(f"Reduced moment removes central component {shift:.3e}")
    return MomentValue(
        value.quiver, value.dims,
        {v: m - shift * np.eye(m.shape[0]) for v, m in value.comps.items()},
    )


def constant_moment_norm(weight: Weight, dims: DimensionVector) -> Fraction:
    """sum_a lambda_a^2 d_a, exactly: the moment norm at rho = 0."""
    return slope(weight, dims).constant_norm(dims)

