"""
The moment map Phi_theta and its verification identities.

- slope.py: exact slope normalization lambda_a = theta_a - mu
- moment_map.py: L_theta(rho), its norm and the quotient (traceless) part
- identities.py: moment-map identity, Hamiltonian property, equivariance
"""

from .slope import Slope, slope
from .moment_map import (
    MomentValue,
    central_element,
    commutator_term,
    constant_moment_norm,
    moment,
    moment_norm,
    polarization,
    reduced_moment,
)
from .identities import (
    check_equivariance,
    check_hamiltonian,
    check_moment_identity,
    finite_difference_derivative,
    moment_derivative,
    moment_function,
    trace_residual,
)

__all__ = [
    'Slope',
    'slope',
    'MomentValue',
    'central_element',
    'commutator_term',
    'constant_moment_norm',
    'moment',
    'moment_norm',
    'polarization',
    'reduced_moment',
    'check_equivariance',
    'check_hamiltonian',
    'check_moment_identity',
    'finite_difference_derivative',
    'moment_derivative',
    'moment_function',
    'trace_residual',
]
