"""Slope normalization of a rational weight"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from ..quiver.model import DimensionVector, Weight


@dataclass(frozen=True)
class Slope:
    """
    mu = sum(theta_a d_a) / sum(d_a) and lambda_a = theta_a - mu.

    With this normalization sum(lambda_a d_a) == 0 exactly, which is what
    makes the moment map factor through the Lie algebra of K/(H cap K).
    """

    mu: Fraction
    lambdas: Mapping[str, Fraction]

    def weighted_sum(self, dims: DimensionVector) -> Fraction:
        """sum(lambda_a d_a); zero under the slope convention."""
        return sum((lam * dims[v] for v, lam in self.lambdas.items()), Fraction(0))

    def constant_norm(self, dims: DimensionVector) -> Fraction:
        """sum(lambda_a^2 d_a): the squared moment norm at rho = 0."""
        return sum((lam * lam * dims[v] for v, lam in self.lambdas.items()), Fraction(0))


def slope(weight: Weight, dims: DimensionVector, mu: Optional[Fraction] = None) -> Slope:
    """
    Slope of ``weight`` at ``dims`` in exact rational arithmetic.

    Args:
        mu: Override for the normalizing constant. Any other value breaks
            the trace-sum identity.
    """
    if mu is None:
        total = dims.total()
        mu = sum((Fraction(weight[v]) * d for v, d in dims.dims.items()), Fraction(0)) / total
    mu = Fraction(mu)
    return Slope(mu, {v: Fraction(weight[v]) - mu for v in weight.theta})
