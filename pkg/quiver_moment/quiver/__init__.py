"""
Finite quivers and their graph procedures.

- model.py: Quiver, DimensionVector, Weight, Path and validate
- graph.py: cycle search, acyclicity, support subquiver, source arrows
"""

from .model import Arrow, DimensionVector, Path, Quiver, Weight, ensure_valid, validate
from .graph import (
    find_cycle,
    find_source_arrow,
    is_acyclic,
    support_subquiver,
    topological_order,
    walk_to_source_arrow,
)

__all__ = [
    'Arrow',
    'DimensionVector',
    'Path',
    'Quiver',
    'Weight',
    'ensure_valid',
    'validate',
    'find_cycle',
    'find_source_arrow',
    'is_acyclic',
    'support_subquiver',
    'topological_order',
    'walk_to_source_arrow',
]
