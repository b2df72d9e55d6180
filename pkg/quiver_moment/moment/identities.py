"""
Verification identities for the moment map.

Each check evaluates two sides of an exact algebraic identity independently
and returns the absolute residual; callers compare it against
``settings.identity_rtol`` times the matching ``*_scale`` value.
"""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from ..quiver.model import Weight
from ..repspace.action import act, induced_vector_field, lie_inner, omega
from ..repspace.points import GroupElement, LieElement, RepPoint
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings
from .moment_map import central_element, moment, polarization

logger = logging.getLogger(__name__)


def moment_function(
    rho: RepPoint,
    xi: LieElement,
    weight: Weight,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """Phi^xi(rho) = <xi, L_theta(rho)>, the Hamiltonian function of xi."""
    return lie_inner(xi, moment(rho, weight), settings)


def check_moment_identity(
    rho: RepPoint,
    xi: LieElement,
    weight: Weight,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """
    Residual of  <xi, L_theta(rho)> = 1/2 Omega(xi#(rho), rho) + <xi, eta>
    with eta = (i lambda_a I)_a.

    Raises:
        NotSkewHermitianError: If xi is not in Lie(K)
    """
    xi = xi.require_skew(settings)
    lhs = moment_function(rho, xi, weight, settings)
    rhs = 0.5 * omega(induced_vector_field(xi, rho), rho) + lie_inner(xi, central_element(rho, weight), settings)
    return abs(lhs - rhs)


def moment_derivative(
    rho: RepPoint,
    xi: LieElement,
    tau: RepPoint,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """
    d Phi^xi (rho)(tau), exactly, by polarization of the quadratic part:

        <xi, i (B(rho, tau) + B(tau, rho))>

    The weight only shifts Phi^xi by a constant, so it does not appear.
    """
    forward = polarization(rho, tau)
    backward = polarization(tau, rho)
    total = {v: forward[v] + backward[v] for v in rho.quiver.vertices}
    derivative = LieElement(
        rho.quiver, rho.dims,
        {v: 1j * (s + s.conj().T) / 2 for v, s in total.items()},
    )
    return lie_inner(xi, derivative, settings)


def finite_difference_derivative(
    rho: RepPoint,
    xi: LieElement,
    tau: RepPoint,
    weight: Weight,
    step: Optional[float] = None,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """Central difference (Phi^xi(rho + h tau) - Phi^xi(rho - h tau)) / 2h; an oracle only."""
    h = settings.fd_step if step is None else step
    ahead = moment_function(rho + tau * h, xi, weight, settings)
    behind = moment_function(rho - tau * h, xi, weight, settings)
    return (ahead - behind) / (2 * h)


def check_hamiltonian(
    rho: RepPoint,
    xi: LieElement,
    tau: RepPoint,
    weight: Weight,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """
    Residual of  d Phi^xi (rho)(tau) = Omega(xi#(rho), tau),
    i.e. xi# is the Hamiltonian vector field of Phi^xi.

    The weight does not enter the derivative; it is accepted for symmetry
    with the other checks.

    Raises:
        NotSkewHermitianError: If xi is not in Lie(K)
    """
    xi = xi.require_skew(settings)
    return abs(moment_derivative(rho, xi, tau, settings) - omega(induced_vector_field(xi, rho), tau))


def check_equivariance(
    rho: RepPoint,
    k: GroupElement,
    weight: Weight,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """
    max_a || L_theta(rho k)_a - k_a^H L_theta(rho)_a k_a ||_F

    Raises:
        NotUnitaryError: If k is not in K
    """
    k.require_unitary(settings)
    moved = moment(act(rho, k, settings), weight)
    base = moment(rho, weight)
    residual = 0.0
    for vertex in rho.quiver.vertices:
        comp = k.comps[vertex]
        conjugated = comp.conj().T @ base.comps[vertex] @ comp
        residual = max(residual, float(np.linalg.norm(moved.comps[vertex] - conjugated)))
    return residual


def trace_residual(rho: RepPoint, weight: Weight, mu: Optional[Fraction] = None) -> float:
    """|sum_a tr(-i L_theta(rho)_a)|; zero under the slope convention."""
    return abs(moment(rho, weight, mu).central_trace())


# ============================================================================
# Tolerance scales
# ============================================================================

def moment_identity_scale(rho: RepPoint, xi: LieElement) -> float:
    return (1.0 + rho.norm_squared()) * (1.0 + xi.frobenius_norm())


def hamiltonian_scale(rho: RepPoint, xi: LieElement, tau: RepPoint) -> float:
    return (1.0 + rho.norm_squared()) * (1.0 + xi.frobenius_norm()) * (1.0 + tau.norm())


def point_scale(rho: RepPoint) -> float:
    """Scale for equivariance, trace and quotient residuals."""
    return 1.0 + rho.norm_squared()


def within_tolerance(residual: float, scale: float, settings: QuiverSettings = DEFAULT_SETTINGS) -> bool:
    return residual <= max(settings.identity_rtol * scale, settings.abs_floor)
