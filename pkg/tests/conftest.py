"""Shared fixtures: a seeded generator and the small quivers used across tests."""

from fractions import Fraction

import numpy as np
import pytest

from quiver_moment.quiver import DimensionVector, Quiver, Weight


@pytest.fixture
def rng():
    return np.random.default_rng(20260704)


@pytest.fixture
def kronecker1():
    """alpha: a -> b, d = (1, 1), theta = 0."""
    q = Quiver.build("ab", [("alpha", "a", "b")])
    return q, DimensionVector({"a": 1, "b": 1}), Weight.zero(q)


@pytest.fixture
def chain2():
    """a1: a -> b, a2: b -> c, all d = 1, theta = 0."""
    q = Quiver.build("abc", [("a1", "a", "b"), ("a2", "b", "c")])
    return q, DimensionVector({"a": 1, "b": 1, "c": 1}), Weight.zero(q)


@pytest.fixture
def loop():
    """beta: b -> b, d_b = 2."""
    q = Quiver.build(["b"], [("beta", "b", "b")])
    return q, DimensionVector({"b": 2}), Weight({"b": Fraction(3, 2)})
