"""Seeded random samples of points, unitary group elements and Lie(K) elements"""

from typing import Optional, Union

import numpy as np
from scipy.linalg import qr

from ..quiver.model import DimensionVector, Quiver
from .points import GroupElement, LieElement, RepPoint

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


def _rng(seed: SeedLike) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _ginibre(rng: np.random.Generator, shape) -> np.ndarray:
    """Matrix of i.i.d. standard complex normal entries."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_point(quiver: Quiver, dims: DimensionVector, radius: float, seed: SeedLike = None) -> RepPoint:
    """
    A point with ||rho|| = radius in a uniformly random direction.

    Entries are drawn i.i.d. complex standard normal, arrow by arrow in
    declaration order, then the whole family is scaled to the radius.
    """
    rng = _rng(seed)
    mats = {arrow.id: _ginibre(rng, dims.shape(arrow)) for arrow in quiver.arrows}
    point = RepPoint(quiver, dims, mats)
    norm = point.norm()
    if radius == 0 or norm == 0:
        return RepPoint.zeros(quiver, dims)
    return point * (radius / norm)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random n x n unitary from the QR decomposition of a Ginibre matrix."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    q, r = qr(_ginibre(rng, (n, n)))
    d = np.diag(r)
    # fix the phases so the distribution is Haar, not QR-convention biased
    return q * (d / np.abs(d))


def random_unitary(quiver: Quiver, dims: DimensionVector, seed: SeedLike = None) -> GroupElement:
    """A Haar-random element of K, vertex by vertex in declaration order."""
    rng = _rng(seed)
    return GroupElement(quiver, dims, {v: haar_unitary(dims[v], rng) for v in quiver.vertices})


def random_group_element(quiver: Quiver, dims: DimensionVector, seed: SeedLike = None) -> GroupElement:
    """A random element of G: identity plus a Ginibre perturbation, generically invertible."""
    rng = _rng(seed)
    return GroupElement(
        quiver, dims,
        {v: np.eye(dims[v]) + 0.5 * _ginibre(rng, (dims[v], dims[v])) for v in quiver.vertices},
    )


def random_skew(
    quiver: Quiver,
    dims: DimensionVector,
    seed: SeedLike = None,
    norm: Optional[float] = None,
) -> LieElement:
    """
    A random element of Lie(K) built as (A - A^H)/2, exactly skew-Hermitian.

    Args:
        norm: If given, rescale to this Frobenius norm
    """
    rng = _rng(seed)
    comps = {}
    for vertex in quiver.vertices:
        a = _ginibre(rng, (dims[vertex], dims[vertex]))
        comps[vertex] = (a - a.conj().T) / 2
    xi = LieElement(quiver, dims, comps)
    if norm is not None:
        current = xi.frobenius_norm()
        xi = xi * (norm / current) if current > 0 else LieElement.zeros(quiver, dims)
    return xi


def random_hermitian(n: int, seed: SeedLike = None, scale: float = 1.0) -> np.ndarray:
    """A random n x n Hermitian matrix (A + A^H)/2."""
    rng = _rng(seed)
    a = _ginibre(rng, (n, n)) * scale
    return (a + a.conj().T) / 2
