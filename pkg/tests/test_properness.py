#!/usr/bin/env python3
"""
Tests for the properness verdict and its evidence:

- witness families: constant moment value, ||rho(n)||^2 = l n^2 exactly
- verdict vs. an independent reachability oracle on every small quiver
- coercivity certificates: peel-order replay, hand values, sampled
  soundness, monotone R(M), serialized schedule, infeasible thresholds
- trace inequality and the Kronecker-quiver estimate
- the sampling probe

Run from the repo root: python -m pytest tests/test_properness.py
"""

from collections import Counter
from dataclasses import replace
from fractions import Fraction
from itertools import combinations_with_replacement
import json
import math

import numpy as np
import pytest

from builders import has_cycle_by_reachability, random_dims, random_quiver, random_weight
from quiver_moment.moment import moment, moment_norm, slope
from quiver_moment.properness import (
    Verdict,
    analyze,
    kronecker_coefficients,
    kronecker_lower_bound,
    kronecker_norm_expansion,
    kronecker_radius,
    make_certificate,
    make_witness,
    probe,
    radius_from_schedule,
    replay_peel_order,
    trace_inequality_gap,
)
from quiver_moment.properness.analysis import PropernessReport, Reason
from quiver_moment.quiver import DimensionVector, Path, Quiver, Weight, find_cycle
from quiver_moment.repspace import RepPoint, random_point
from quiver_moment.repspace.sampling import random_hermitian
from quiver_moment.utils.errors import CyclicQuiverError, InvalidInputError, NotKroneckerError, QuiverError
from quiver_moment.utils.settings import build_call_settings


def _cycle_quiver(length, dims, extra_vertex=False):
    vertices = [f"c{i}" for i in range(length)]
    arrows = [(f"e{i}", vertices[i], vertices[(i + 1) % length]) for i in range(length)]
    if extra_vertex:
        vertices.append("x")
        arrows.append(("out", vertices[0], "x"))
    q = Quiver.build(vertices, arrows)
    d = DimensionVector({v: dims[i % len(dims)] for i, v in enumerate(vertices)})
    return q, d


# ---------------------------------------------------------------------------
# Witness families
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("length", [1, 2, 3, 4, 5])
def test_witness_moment_is_constant(length, rng):
    for extra in (False, True):
        q, d = _cycle_quiver(length, [int(x) for x in rng.integers(1, 4, size=length + 1)], extra)
        w = random_weight(rng, q)
        witness = make_witness(q, d, w, find_cycle(q))
        base = moment(witness.generate(0.0), w)
        assert base.distance(witness.base_moment) == 0.0
        for n in (0, 1, 10, 100, 1000):
            point = witness.generate(n)
            assert point.norm_squared() == length * n * n
            assert witness.norm_squared(n) == length * n * n
            assert moment(point, w).distance(base) <= 1e-7


def test_witness_constancy_check_uses_witness_tolerance():
    q = Quiver.build("ab", [("x", "a", "b"), ("y", "b", "a")])
    d = DimensionVector({"a": 2, "b": 1})
    w = Weight({"a": Fraction(1), "b": Fraction(0)})
    witness = make_witness(q, d, w, find_cycle(q))
    assert witness.constancy_deviation() == 0.0
    assert witness.is_constant()

    # a witness whose recorded Phi(0) belongs to another weight
    skewed = replace(witness, base_moment=moment(RepPoint.zeros(q, d), Weight.zero(q)))
    assert skewed.constancy_deviation() == pytest.approx(2 / 3, rel=1e-12)
    assert not skewed.is_constant()
    assert skewed.is_constant(build_call_settings({"witness_atol": 1.0}))


def test_identity_style_witness_on_a_loop(loop):
    q, d, w = loop
    witness = make_witness(q, d, w, find_cycle(q), style="identity")
    for n in (0, 1, 10, 1000):
        point = witness(n)
        assert np.array_equal(point["beta"], n * np.eye(2))
        assert point.norm_squared() == witness.norm_squared(n) == 2 * n * n
        assert moment_norm(point, w) == pytest.approx(0.0, abs=1e-7)


def test_witness_serialization(loop):
    q, d, w = loop
    data = make_witness(q, d, w, find_cycle(q)).to_dict()
    assert data["cycle"] == ["beta"]
    assert data["cycle_vertices"] == ["b", "b"]
    assert data["norm_squared"] == "1*n^2"
    assert "E_11" in data["generator"]


def test_witness_rejects_bad_input(loop):
    q, d, w = loop
    cycle = find_cycle(q)
    with pytest.raises(QuiverError, match="Valid values"):
        make_witness(q, d, w, cycle, style="diagonal")
    chain = Quiver.build("ab", [("x", "a", "b")])
    with pytest.raises(QuiverError, match="cycle not in support"):
        make_witness(chain, DimensionVector({"a": 1, "b": 1}), Weight.zero(chain), Path(("x",), chain))
    with pytest.raises(QuiverError, match="dimension 0"):
        make_witness(q, DimensionVector({"b": 0}), w, cycle)
    two = Quiver.build("ab", [("x", "a", "b"), ("y", "b", "a")])
    with pytest.raises(QuiverError, match="needs a loop"):
        make_witness(two, DimensionVector({"a": 1, "b": 1}), Weight.zero(two), find_cycle(two), style="identity")


# ---------------------------------------------------------------------------
# Verdict
# ---------------------------------------------------------------------------

def _small_quivers():
    """Every quiver on 1-4 vertices with at most 4 arrows, each slot used at most twice."""
    for n in range(1, 5):
        vertices = [f"v{i}" for i in range(n)]
        slots = [(s, t) for s in vertices for t in vertices]
        for count in range(0, 5):
            for choice in combinations_with_replacement(slots, count):
                if count and max(Counter(choice).values()) > 2:
                    continue
                arrows = [(f"e{k}", s, t) for k, (s, t) in enumerate(choice)]
                yield Quiver.build(vertices, arrows)


def test_verdict_matches_reachability_on_all_small_quivers(rng):
    checked = 0
    for q in _small_quivers():
        d = random_dims(rng, q, max_dim=2, allow_zero=True)
        report = analyze(q, d, Weight.zero(q))
        assert report.proper == (not has_cycle_by_reachability(q, d)), q
        assert report.quotient_verdict is report.verdict
        if report.proper:
            assert report.reason is Reason.ACYCLIC_SUPPORT
            assert replay_peel_order(report.support, report.certificate)
        else:
            assert report.reason is Reason.CYCLE_FOUND
            assert Path(report.witness.cycle.arrows, report.support).is_cycle()
        checked += 1
    assert checked > 1000


def test_report_needs_matching_evidence(kronecker1):
    q, d, w = kronecker1
    certificate = make_certificate(q, d, w)
    with pytest.raises(QuiverError):
        PropernessReport(Verdict.NOT_PROPER, Reason.CYCLE_FOUND, q, d, w, q, certificate=certificate)
    with pytest.raises(QuiverError):
        PropernessReport(Verdict.PROPER, Reason.ACYCLIC_SUPPORT, q, d, w, q)


def test_zero_dimension_breaks_cycle():
    q = Quiver.build("ab", [("x", "a", "b"), ("y", "b", "a")])
    report = analyze(q, DimensionVector({"a": 1, "b": 0}), Weight.zero(q))
    assert report.verdict is Verdict.PROPER
    assert report.support_generalized
    assert report.certificate.peel_order == ()
    assert report.certificate.radius(5.0) == 0.0


def test_cycle_survives_zero_dimension_elsewhere():
    q = Quiver.build("abc", [("beta", "b", "b"), ("x", "a", "b"), ("y", "c", "a")])
    report = analyze(q, DimensionVector({"a": 0, "b": 1, "c": 2}), Weight.zero(q))
    assert report.verdict is Verdict.NOT_PROPER
    assert report.support_generalized
    assert report.witness.cycle.arrows == ("beta",)


def test_loop_with_zero_dimension_is_proper():
    q = Quiver.build("ab", [("beta", "b", "b")])
    report = analyze(q, DimensionVector({"a": 1, "b": 0}), Weight.zero(q))
    assert report.proper


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def test_kronecker_one_radius_is_sqrt_m(kronecker1):
    certificate = make_certificate(*kronecker1)
    assert certificate.schedule() == [(0.0, 1.0)]
    for m in (0.0, 0.25, 1.0, 9.0):
        assert certificate.radius(m) == pytest.approx(math.sqrt(m), abs=1e-15)


def test_chain_of_two_radius_is_sqrt_3m(chain2):
    certificate = make_certificate(*chain2)
    assert [step.vertex for step in certificate.peel_order] == ["a", "b"]
    assert certificate.schedule() == [(0.0, 1.0), (0.0, 2.0)]
    for m in (0.1, 1.0, 10.0):
        assert certificate.radius(m) == pytest.approx(math.sqrt(3 * m), rel=1e-12)


def test_weighted_kronecker_schedule():
    q = Quiver.build("ab", [("x", "a", "b"), ("y", "a", "b"), ("z", "a", "b")])
    d = DimensionVector({"a": 2, "b": 1})
    w = Weight({"a": Fraction(1), "b": Fraction(-1, 2)})
    certificate = make_certificate(q, d, w)
    assert len(certificate.peel_order) == 1
    assert certificate.peel_order[0].arrows == ("x", "y", "z")
    (c0, c1), = certificate.schedule()
    assert c0 == pytest.approx(1.0)
    assert c1 == pytest.approx(math.sqrt(2))
    assert certificate.infeasible_below is None


def test_certificate_on_cycle_raises(loop):
    with pytest.raises(CyclicQuiverError):
        make_certificate(*loop)


def test_infeasible_threshold():
    q = Quiver.build("ab", [("alpha", "a", "b")])
    d = DimensionVector({"a": 1, "b": 1})
    w = Weight({"a": Fraction(-1), "b": Fraction(1)})
    certificate = make_certificate(q, d, w)
    assert certificate.schedule() == [(-1.0, 1.0)]
    assert certificate.infeasible_below == pytest.approx(1.0)
    assert certificate.radius(0.5) == 0.0
    # every point really has ||Phi|| >= 1
    for seed in range(200):
        rho = random_point(q, d, 3.0 * seed / 200, seed)
        assert math.sqrt(moment_norm(rho, w)) >= 1.0 - 1e-12


@pytest.mark.parametrize("per_arrow", [False, True])
def test_peel_order_replays(per_arrow, rng):
    for _ in range(100):
        q = random_quiver(rng, max_vertices=6, max_arrows=9, acyclic=True)
        d = random_dims(rng, q, max_dim=3)
        certificate = make_certificate(q, d, random_weight(rng, q), per_arrow=per_arrow)
        assert replay_peel_order(q, certificate)
        assert sum(len(step.arrows) for step in certificate.peel_order) == len(q.arrows)
        if per_arrow:
            assert all(len(step.arrows) == 1 for step in certificate.peel_order)


def test_replay_rejects_a_scrambled_order(chain2):
    q, d, w = chain2
    certificate = make_certificate(q, d, w)
    reversed_steps = type(certificate)(tuple(reversed(certificate.peel_order)))
    assert not replay_peel_order(q, reversed_steps)
    truncated = type(certificate)(certificate.peel_order[:1])
    assert not replay_peel_order(q, truncated)


def _ball_batch(rng, q, d, radius, size):
    """``size`` points, radius uniform in [0, radius], direction uniform; arrow matrices stacked on axis 0."""
    mats = {}
    for arrow in q.arrows:
        shape = (size, *d.shape(arrow))
        mats[arrow.id] = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    scale = radius * rng.random(size) / _batch_norms(mats)
    return {key: x * scale[:, None, None] for key, x in mats.items()}


def _batch_norms(mats):
    return np.sqrt(sum(np.sum(np.abs(x) ** 2, axis=(1, 2)) for x in mats.values()))


def _batch_moment_norms(q, d, w, mats):
    """||Phi||^2 for every point of a batch, computed blockwise with numpy."""
    lambdas = slope(w, d).lambdas
    size = next(iter(mats.values())).shape[0]
    blocks = {v: np.tile(float(lambdas[v]) * np.eye(d[v], dtype=complex), (size, 1, 1)) for v in q.vertices}
    for arrow in q.arrows:
        x = mats[arrow.id]
        xh = np.conj(np.swapaxes(x, 1, 2))
        blocks[arrow.tgt] = blocks[arrow.tgt] + x @ xh
        blocks[arrow.src] = blocks[arrow.src] - xh @ x
    return sum(np.sum(np.abs(b) ** 2, axis=(1, 2)) for b in blocks.values())


def _check_soundness(q, d, w, certificate, m, rng, wanted, batch=2000, max_batches=500):
    """
    Rejection-sample the ball of radius 2 R(M) until ``wanted`` points with
    ||Phi|| <= M are accepted; every accepted point must satisfy ||rho|| <= R(M).
    Returns the number accepted.
    """
    bound = certificate.radius(m)
    accepted = 0
    for _ in range(max_batches):
        mats = _ball_batch(rng, q, d, 2.0 * bound, batch)
        inside = np.sqrt(_batch_moment_norms(q, d, w, mats)) <= m
        norms = _batch_norms(mats)[inside]
        assert np.all(norms <= bound * (1 + 1e-9) + 1e-12), (q, m, float(norms.max()), bound)
        accepted += int(inside.sum())
        if accepted >= wanted:
            break
    return accepted


def _acyclic_case(rng, weighted=False):
    while True:
        q = random_quiver(rng, max_vertices=5, max_arrows=6, acyclic=True)
        if q.arrows:
            break
    d = random_dims(rng, q, max_dim=3)
    w = random_weight(rng, q, bound=3) if weighted else Weight.zero(q)
    return q, d, w


def test_batched_moment_norm_matches_library(rng):
    for _ in range(20):
        q, d, w = _acyclic_case(rng, weighted=True)
        mats = _ball_batch(rng, q, d, 4.0, 5)
        expected = [
            moment_norm(RepPoint(q, d, {key: x[i] for key, x in mats.items()}), w)
            for i in range(5)
        ]
        assert _batch_moment_norms(q, d, w, mats) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("m", [0.1, 1.0, 10.0])
def test_certificate_is_sound_on_random_acyclic_quivers(m, rng):
    for _ in range(50):
        q, d, w = _acyclic_case(rng)
        accepted = _check_soundness(q, d, w, make_certificate(q, d, w), m, rng, wanted=1000)
        assert accepted >= 1000, (q, d.dims)


@pytest.mark.parametrize("per_arrow", [False, True])
def test_certificate_is_sound_with_weights(per_arrow, rng):
    for _ in range(20):
        q, d, w = _acyclic_case(rng, weighted=True)
        certificate = make_certificate(q, d, w, per_arrow=per_arrow)
        floor = math.sqrt(moment_norm(RepPoint.zeros(q, d), w))
        for m in (floor + 0.1, floor + 1.0, floor + 10.0):
            _check_soundness(q, d, w, certificate, m, rng, wanted=200, max_batches=5)


def test_radius_is_nondecreasing(rng):
    levels = np.linspace(0.0, 50.0, 201)
    for _ in range(50):
        q = random_quiver(rng, acyclic=True)
        d = random_dims(rng, q)
        certificate = make_certificate(q, d, random_weight(rng, q), per_arrow=bool(rng.integers(2)))
        radii = [certificate.radius(m) for m in levels]
        assert all(b >= a for a, b in zip(radii, radii[1:]))


def test_serialized_schedule_reproduces_radius(rng):
    for _ in range(30):
        q = random_quiver(rng, acyclic=True)
        d = random_dims(rng, q)
        certificate = make_certificate(q, d, random_weight(rng, q))
        data = json.loads(json.dumps(certificate.to_dict()))
        assert data["label"] == "sound, not tight"
        for m in (0.0, 0.3, 1.0, 7.5, 100.0):
            assert radius_from_schedule(data["radius_schedule"], m) == pytest.approx(certificate.radius(m), abs=1e-12)


# ---------------------------------------------------------------------------
# Closed-form bounds
# ---------------------------------------------------------------------------

def test_trace_inequality_on_random_hermitian_matrices(rng):
    for _ in range(500):
        n = int(rng.integers(1, 9))
        a = random_hermitian(n, rng, scale=float(rng.uniform(0.1, 10.0)))
        scale = n * float(np.linalg.norm(a)) ** 2
        assert trace_inequality_gap(a) >= -1e-12 * (1 + scale)


def test_trace_inequality_is_tight_on_scalars():
    assert trace_inequality_gap(3.5 * np.eye(4)) == pytest.approx(0.0, abs=1e-12)


def _random_kronecker(rng):
    n = int(rng.integers(1, 4))
    q = Quiver.build("ab", [(f"x{i}", "a", "b") for i in range(n)])
    d = DimensionVector({"a": int(rng.integers(1, 5)), "b": int(rng.integers(1, 5))})
    return q, d, random_weight(rng, q, bound=4)


def test_kronecker_lower_bound_holds(rng):
    for _ in range(10_000):
        q, d, w = _random_kronecker(rng)
        rho = random_point(q, d, 3.0 * rng.random(), rng)
        lhs, rhs = kronecker_lower_bound(rho, w)
        assert lhs >= rhs - 1e-9 * (1 + abs(lhs))


def test_kronecker_bound_is_equality_for_scalar_dimensions(rng):
    q = Quiver.build("ab", [("alpha", "a", "b")])
    d = DimensionVector({"a": 1, "b": 1})
    w = Weight.zero(q)
    for _ in range(100):
        rho = random_point(q, d, 5.0 * rng.random(), rng)
        lhs, rhs = kronecker_lower_bound(rho, w)
        assert lhs == pytest.approx(2 * rho.norm_squared() ** 2, abs=1e-10 * (1 + lhs))
        assert rhs == pytest.approx(lhs, abs=1e-10 * (1 + lhs))


def test_kronecker_norm_expansion_is_exact(rng):
    for _ in range(200):
        q, d, w = _random_kronecker(rng)
        rho = random_point(q, d, 4.0 * rng.random(), rng)
        value = moment_norm(rho, w)
        assert kronecker_norm_expansion(rho, w) == pytest.approx(value, rel=1e-9, abs=1e-12)


def test_kronecker_coefficients():
    q = Quiver.build("ab", [("x", "a", "b"), ("y", "a", "b"), ("z", "a", "b")])
    d = DimensionVector({"a": 2, "b": 1})
    w = Weight({"a": Fraction(1), "b": Fraction(-1, 2)})
    assert kronecker_coefficients(q, d, w) == pytest.approx((1.5, -3.0, 1.5))


def test_kronecker_radius(kronecker1):
    for m in (0.5, 1.0, 4.0):
        assert kronecker_radius(*kronecker1, m) == pytest.approx(math.sqrt(m / math.sqrt(2)), rel=1e-12)
    q = kronecker1[0]
    weighted = (q, kronecker1[1], Weight({"a": Fraction(-1), "b": Fraction(1)}))
    assert kronecker_radius(*weighted, 1.0) is None
    assert kronecker_radius(*weighted, 2.0) == pytest.approx(math.sqrt((math.sqrt(8) * 2 - 4) / 4), rel=1e-12)


def test_kronecker_radius_is_sound(rng):
    for _ in range(20):
        q, d, w = _random_kronecker(rng)
        floor = math.sqrt(moment_norm(random_point(q, d, 0.0), w))
        m = floor + 2.0
        radius = kronecker_radius(q, d, w, m)
        assert radius is not None
        for _ in range(100):
            rho = random_point(q, d, 2.0 * radius * rng.random(), rng)
            if math.sqrt(moment_norm(rho, w)) <= m:
                assert rho.norm() <= radius * (1 + 1e-9)


@pytest.mark.parametrize("vertices,arrows,dims", [
    ("abc", [("a1", "a", "b"), ("a2", "b", "c")], {"a": 1, "b": 1, "c": 1}),
    ("ab", [("x", "a", "b"), ("y", "b", "a")], {"a": 1, "b": 1}),
    ("ab", [], {"a": 1, "b": 1}),
    ("ab", [("x", "a", "b")], {"a": 0, "b": 1}),
])
def test_not_kronecker(vertices, arrows, dims):
    q = Quiver.build(vertices, arrows)
    with pytest.raises(NotKroneckerError):
        kronecker_coefficients(q, DimensionVector(dims), Weight.zero(q))


# ---------------------------------------------------------------------------
# Probe
# ---------------------------------------------------------------------------

def test_probe_shows_flat_minimum_on_a_loop(loop):
    rows = probe(*loop, radii=[1.0, 10.0, 100.0], samples_per_radius=10, seed=5)
    assert [row.samples for row in rows] == [11, 11, 11]
    for row in rows:
        assert row.witness_moment_norm == pytest.approx(0.0, abs=1e-7)
        assert row.min_moment_norm == pytest.approx(0.0, abs=1e-7)
    assert rows[-1].max_moment_norm > rows[0].max_moment_norm


def test_probe_on_kronecker_one_is_exact(kronecker1):
    for row in probe(*kronecker1, radii=[0.5, 1.0, 3.0], samples_per_radius=8, seed=1):
        expected = 2 * row.radius ** 4
        assert row.witness_moment_norm is None
        assert row.min_moment_norm == pytest.approx(expected, rel=1e-9)
        assert row.max_moment_norm == pytest.approx(expected, rel=1e-9)


def test_probe_is_reproducible_per_radius(chain2):
    first = probe(*chain2, radii=[1.0, 2.0], samples_per_radius=20, seed=9)
    again = probe(*chain2, radii=[1.0, 2.0], samples_per_radius=20, seed=9)
    other = probe(*chain2, radii=[1.0, 5.0], samples_per_radius=20, seed=9)
    assert first == again
    assert first[0] == other[0]
    assert first[0].to_dict()["radius"] == 1.0


def test_sampling_rejects_zero_samples_with_radii(chain2, loop):
    for case in (chain2, loop):
        with pytest.raises(InvalidInputError, match="at least 1"):
            probe(*case, radii=[1.0], samples_per_radius=0, seed=0)
    assert probe(*chain2, radii=[], samples_per_radius=0, seed=0) == []


@pytest.mark.parametrize("fixture", ["chain2", "kronecker1"])
def test_moment_norm_exceeds_level_beyond_certified_radius(fixture, request):
    q, d, w = request.getfixturevalue(fixture)
    certificate = make_certificate(q, d, w)
    for m in (0.1, 1.0, 10.0):
        rows = probe(q, d, w, radii=[certificate.radius(m) + 0.1], samples_per_radius=200, seed=4)
        assert math.sqrt(rows[0].min_moment_norm) > m
