"""
Group action, Hermitian structure and symplectic form on the representation
space.

G acts on the right by (rho g)_alpha = g_t^-1 rho_alpha g_s. The Hermitian
metrics on the vertex spaces are the standard ones in the chosen bases, so
adjoints are conjugate transposes.
"""

import logging

import numpy as np
from scipy.linalg import expm

from ..utils.errors import ShapeMismatchError
from ..utils.settings import DEFAULT_SETTINGS, QuiverSettings
from .points import GroupElement, LieElement, RepPoint

logger = logging.getLogger(__name__)


def _same_space(u, v) -> None:
    if u.quiver != v.quiver or u.dims.dims != v.dims.dims:
        raise ShapeMismatchError(
            f"{type(u).__name__} and {type(v).__name__} live over different quivers or dimension vectors"
        )


def act(rho: RepPoint, g: GroupElement, settings: QuiverSettings = DEFAULT_SETTINGS) -> RepPoint:
    """
    Right action of G: (rho g)_alpha = g_t(alpha)^-1 rho_alpha g_s(alpha).

    Satisfies act(act(rho, g), h) == act(rho, g @ h). Tangent vectors
    transform by the same formula since the action is linear.

    Raises:
        ShapeMismatchError: If rho and g live over different spaces
        SingularElementError: If a component of g is singular (names the vertex)
    """
    _same_space(rho, g)
    g.require_invertible(settings)
    moved = {}
    for arrow in rho.quiver.arrows:
        mat = rho.mats[arrow.id]
        if mat.size == 0:
            moved[arrow.id] = mat
            continue
        moved[arrow.id] = np.linalg.solve(g.comps[arrow.tgt], mat @ g.comps[arrow.src])
    return RepPoint(rho.quiver, rho.dims, moved)


def inner(u: RepPoint, v: RepPoint) -> complex:
    """
    Hermitian inner product <u, v> = sum_alpha tr(u_alpha v_alpha^H).

    Linear in ``u``, conjugate-linear in ``v``.
    """
    _same_space(u, v)
    return complex(sum(np.vdot(v.mats[key], m) for key, m in u.mats.items()))


def omega(sigma: RepPoint, tau: RepPoint) -> float:
    """Symplectic form Omega(sigma, tau) = -2 Im <sigma, tau> (constant coefficients)."""
    return -2.0 * inner(sigma, tau).imag


def induced_vector_field(xi: LieElement, rho: RepPoint) -> RepPoint:
    """
    Fundamental vector field of xi at rho, the t-derivative of
    act(rho, exp(t xi)) at t = 0:

        (xi#(rho))_alpha = rho_alpha xi_s(alpha) - xi_t(alpha) rho_alpha
    """
    _same_space(rho, xi)
    field = {
        arrow.id: rho.mats[arrow.id] @ xi.comps[arrow.src] - xi.comps[arrow.tgt] @ rho.mats[arrow.id]
        for arrow in rho.quiver.arrows
    }
    return RepPoint(rho.quiver, rho.dims, field)


def lie_inner(xi: LieElement, eta: LieElement, settings: QuiverSettings = DEFAULT_SETTINGS) -> float:
    """
    Inner product on Lie(K): <xi, eta> = -sum_a tr(xi_a eta_a).

    Both arguments must be skew-Hermitian within tolerance; they are
    symmetrized before use, which makes the result real.

    Raises:
        NotSkewHermitianError: If either argument is outside tolerance
    """
    _same_space(xi, eta)
    xi = xi.require_skew(settings)
    eta = eta.require_skew(settings)
    total = sum(np.sum(xi.comps[v] * eta.comps[v].T) for v in xi.quiver.vertices)
    return float(-complex(total).real)


def exponential(xi: LieElement, t: float = 1.0) -> GroupElement:
    """The group element exp(t xi), componentwise matrix exponential."""
    return GroupElement(
        xi.quiver, xi.dims,
        {v: expm(t * m) if m.size else m for v, m in xi.comps.items()},
    )


def same_orbit_residual(
    rho: RepPoint,
    sigma: RepPoint,
    g: GroupElement,
    settings: QuiverSettings = DEFAULT_SETTINGS,
) -> float:
    """
    max_alpha ||act(rho, g)_alpha - sigma_alpha||_F.

    Zero exactly when g is an isomorphism of representations from
    (V, sigma) to (V, rho), i.e. sigma lies on the G-orbit of rho via g.
    """
    return act(rho, g, settings).distance(sigma)
