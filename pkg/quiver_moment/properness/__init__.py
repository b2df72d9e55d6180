"""
Properness of the moment map: verdict, witnesses and certificates.

- analysis.py: analyze() and PropernessReport
- witness.py: witness families on cycles (non-properness)
- certificate.py: peeling coercivity certificates (properness)
- bounds.py: trace inequality and Kronecker-quiver estimates
- probe.py: sampled moment norms on spheres
"""

from .analysis import PropernessReport, Reason, Verdict, analyze
from .witness import CycleWitness, make_witness
from .certificate import (
    AffineBound,
    CoercivityCertificate,
    PeelStep,
    make_certificate,
    radius_from_schedule,
    replay_peel_order,
)
from .bounds import (
    kronecker_coefficients,
    kronecker_lower_bound,
    kronecker_norm_expansion,
    kronecker_radius,
    kronecker_vertices,
    trace_inequality_gap,
)
from .probe import ProbeRow, probe

__all__ = [
    'PropernessReport',
    'Reason',
    'Verdict',
    'analyze',
    'CycleWitness',
    'make_witness',
    'AffineBound',
    'CoercivityCertificate',
    'PeelStep',
    'make_certificate',
    'radius_from_schedule',
    'replay_peel_order',
    'kronecker_coefficients',
    'kronecker_lower_bound',
    'kronecker_norm_expansion',
    'kronecker_radius',
    'kronecker_vertices',
    'trace_inequality_gap',
    'ProbeRow',
    'probe',
]
