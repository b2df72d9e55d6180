"""
Closed-form bounds: the trace inequality and the Kronecker-quiver estimate

    ||Phi(rho)||^2 >= (1/d_a + 1/d_b) ||rho||^4 + 2 (lambda_b - lambda_a) ||rho||^2
                      + lambda_a^2 d_a + lambda_b^2 d_b
"""

from typing import Optional, Tuple
import logging
import math

import numpy as np

from ..moment.moment_map import moment_norm
from ..moment.slope import slope
from ..quiver.model import DimensionVector, Quiver, Weight
from ..repspace.points import RepPoint
from ..utils.errors import NotKroneckerError
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings

logger = logging.getLogger(__name__)


def trace_inequality_gap(matrix: np.ndarray) -> float:
    """n tr(A^2) - (tr A)^2, nonnegative for Hermitian A (Cauchy-Schwarz on the eigenvalues)."""
    n = matrix.shape[0]
    return float(n * np.trace(matrix @ matrix).real - np.trace(matrix).real ** 2)


def kronecker_vertices(quiver: Quiver) -> Optional[Tuple[str, str]]:
    """(a, b) if the quiver is a Kronecker n-quiver a => b with n >= 1, else None."""
    if len(quiver.vertices) != 2 or not quiver.arrows:
        return None
    a = quiver.arrows[0].src
    b = quiver.arrows[0].tgt
    if a == b or set(quiver.vertices) != {a, b}:
        return None
    if any(arrow.src != a or arrow.tgt != b for arrow in quiver.arrows):
        return None
    return (a, b)


def _require_kronecker(quiver: Quiver, dims: DimensionVector) -> Tuple[str, str]:
    ends = kronecker_vertices(quiver)
    if ends is None:
        raise NotKroneckerError("quiver is not a Kronecker quiver (two vertices, all arrows a -> b)")
    a, b = ends
    if dims[a] < 1 or dims[b] < 1:
        raise NotKroneckerError(f"Kronecker bound needs d_{a}, d_{b} >= 1, got {dims[a]}, {dims[b]}")
    return ends


def kronecker_coefficients(quiver: Quiver, dims: DimensionVector, weight: Weight) -> Tuple[float, float, float]:
    """Coefficients of ||rho||^4, ||rho||^2 and 1 in the lower bound."""
    a, b = _require_kronecker(quiver, dims)
    lambdas = slope(weight, dims).lambdas
    quartic = 1.0 / dims[a] + 1.0 / dims[b]
    quadratic = float(2 * (lambdas[b] - lambdas[a]))
    constant = float(lambdas[a] ** 2 * dims[a] + lambdas[b] ** 2 * dims[b])
    return quartic, quadratic, constant


def kronecker_lower_bound(
    rho: RepPoint,
    weight: Weight,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> Tuple[float, float]:
    """
    Both sides of the Kronecker estimate at rho.

    Returns:
        (lhs, rhs) with lhs = moment_norm(rho); lhs >= rhs up to rounding

    Raises:
        NotKroneckerError: If the quiver is not Kronecker-shaped with
                           positive dimensions
    """
    quartic, quadratic, constant = kronecker_coefficients(rho.quiver, rho.dims, weight)
    s = rho.norm_squared()
    lhs = moment_norm(rho, weight, settings=settings)
    rhs = quartic * s * s + quadratic * s + constant
    return lhs, rhs


def kronecker_norm_expansion(rho: RepPoint, weight: Weight) -> float:
    """
    The exact expansion of ||Phi(rho)||^2 on a Kronecker quiver:

        tr(P^2) + tr(Q^2) + 2 (lambda_b - lambda_a) ||rho||^2 + lambda_a^2 d_a + lambda_b^2 d_b

    with P = sum rho_j^H rho_j and Q = sum rho_j rho_j^H.
    """
    _, quadratic, constant = kronecker_coefficients(rho.quiver, rho.dims, weight)
    p = sum(m.conj().T @ m for m in rho.mats.values())
    q = sum(m @ m.conj().T for m in rho.mats.values())
    return float(np.trace(p @ p).real + np.trace(q @ q).real) + quadratic * rho.norm_squared() + constant


def kronecker_radius(quiver: Quiver, dims: DimensionVector, weight: Weight, m: float) -> Optional[float]:
    """
    Radius implied by the Kronecker estimate: the largest ||rho|| allowed by
    rhs(||rho||^2) <= M^2. Sharper than the generic peel certificate.

    Returns:
        The radius, or None when no point satisfies ||Phi(rho)|| <= M
    """
    quartic, quadratic, constant = kronecker_coefficients(quiver, dims, weight)
    discriminant = quadratic * quadratic - 4 * quartic * (constant - m * m)
    if discriminant < 0:
        return None
    largest = (-quadratic + math.sqrt(discriminant)) / (2 * quartic)
    if largest < 0:
        return None
    return math.sqrt(largest)
