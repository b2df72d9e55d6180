"""
The representation space of a quiver with its Kaehler structure and the
actions of G and K.

- points.py: RepPoint, GroupElement, LieElement
- action.py: act, inner, omega, induced_vector_field, lie_inner
- sampling.py: seeded random points, unitaries and skew-Hermitian elements
"""

from .points import GroupElement, LieElement, RepPoint
from .action import act, exponential, induced_vector_field, inner, lie_inner, omega, same_orbit_residual
from .sampling import random_group_element, random_hermitian, random_point, random_skew, random_unitary

__all__ = [
    'GroupElement',
    'LieElement',
    'RepPoint',
    'act',
    'exponential',
    'induced_vector_field',
    'inner',
    'lie_inner',
    'omega',
    'same_orbit_residual',
    'random_group_element',
    'random_hermitian',
    'random_point',
    'random_skew',
    'random_unitary',
]
