"""Monte Carlo cross-checks: integrals, norms, and operator probes."""

from __future__ import annotations

import math
import random

import pytest

from ultraherz import (
    DomainError,
    ExponentFunction,
    OperatorSpec,
    OracleConfig,
    PadicContext,
    RadialStepFunction,
    Tail,
    ball_integral,
    hardy,
    hardy_adjoint,
    luxemburg_norm,
    mc_integrate,
    mc_luxemburg,
    mc_operator_probe,
)

CTX = PadicContext(2, 1)


def test_config_validation():
    with pytest.raises(DomainError):
        OracleConfig(samples=10)
    with pytest.raises(DomainError):
        OracleConfig(truncation_window=(5, -5))
    cfg = OracleConfig(samples=1000)
    assert cfg.stratified


def test_stratified_integral_is_nearly_exact_for_radial_integrands():
    """Per-sphere strata have zero variance when f is radial, so the
    stratified estimate collapses onto the analytic value."""
    rng = random.Random(12)
    for _ in range(10):
        lo = rng.randint(-4, 0)
        hi = lo + rng.randint(0, 4)
        f = RadialStepFunction(
            CTX, (lo, hi), tuple(rng.uniform(-2.0, 2.0) for _ in range(hi - lo + 1))
        )
        gamma = hi + rng.randint(0, 2)
        est = mc_integrate(f, gamma, OracleConfig(samples=1000, seed=3))
        assert est.value == pytest.approx(ball_integral(f, gamma), rel=1e-9, abs=1e-12)
        assert est.std_error == pytest.approx(0.0, abs=1e-12)


def test_naive_integral_covers_truth_within_sigma():
    f = RadialStepFunction(CTX, (-2, 1), (1.0, -0.5, 2.0, 0.25))
    est = mc_integrate(f, 1, OracleConfig(samples=20_000, seed=99, stratified=False))
    exact = ball_integral(f, 1)
    assert est.std_error > 0.0
    assert abs(est.value - exact) <= 4.0 * est.std_error


def test_same_seed_reproduces_the_estimate():
    f = RadialStepFunction(CTX, (-1, 1), (1.0, 2.0, -1.0))
    cfg = OracleConfig(samples=2000, seed=123, stratified=False)
    a = mc_integrate(f, 1, cfg)
    b = mc_integrate(f, 1, cfg)
    assert a == b


def test_mc_luxemburg_brackets_the_bisection_value():
    u = ExponentFunction(CTX, (-1, 1), (2.0, 2.5, 3.0), 2.0, 2.0)
    f = RadialStepFunction(CTX, (-1, 1), (1.0, -2.0, 0.5))
    est = mc_luxemburg(f, u, OracleConfig(samples=2000, seed=8))
    exact = luxemburg_norm(f, u).value
    assert abs(est.value - exact) <= max(3.0 * est.std_error, 1e-8 * exact)


def test_operator_probe_hardy_matches_closed_form():
    f = RadialStepFunction(CTX, (-1, 1), (2.0, 1.0, -0.5))
    spec = OperatorSpec("hardy", 0.25)
    closed = hardy(f, 0.25)
    for shell in (-1, 0, 2):
        est = mc_operator_probe(spec, f, shell, OracleConfig(samples=2000, seed=5))
        assert est.value == pytest.approx(closed.evaluate(shell), rel=1e-9, abs=1e-12)


def test_operator_probe_adjoint_accounts_for_truncation_bias():
    """With a decaying outer tail the probe truncates and widens its error
    bar by the analytic remainder, which must cover the gap."""
    f = RadialStepFunction(CTX, (0, 1), (1.0, 0.5), outer_tail=Tail(1.0, -2.5))
    spec = OperatorSpec("adjoint", 0.5)
    closed = hardy_adjoint(f, 0.5)
    est = mc_operator_probe(spec, f, 0, OracleConfig(samples=1000, seed=21, truncation_window=(-8, 8)))
    gap = abs(est.value - closed.evaluate(0))
    assert gap > 0.0
    # the gap IS the analytic remainder, so the bound is tight to rounding
    assert gap <= est.std_error * (1.0 + 1e-9) + 1e-15
    # without any tail the strata cover everything and the probe is exact
    g = RadialStepFunction(CTX, (0, 1), (1.0, 0.5))
    exact = mc_operator_probe(OperatorSpec("adjoint", 0.5), g, 0, OracleConfig(samples=1000, seed=21))
    assert exact.value == pytest.approx(hardy_adjoint(g, 0.5).evaluate(0), rel=1e-12)
    assert exact.std_error == pytest.approx(0.0, abs=1e-15)


def test_operator_probe_commutator_merges_two_runs():
    b = RadialStepFunction(CTX, (-1, 1), (1.0, -1.0, 2.0))
    f = RadialStepFunction(CTX, (-1, 1), (0.5, 2.0, 1.0))
    spec = OperatorSpec("commutator", 0.25, symbol=b)
    est = mc_operator_probe(spec, f, 1, OracleConfig(samples=2000, seed=17))
    from ultraherz import commutator

    closed = commutator(b, f, 0.25)
    assert est.value == pytest.approx(closed.evaluate(1), rel=1e-9, abs=1e-12)
    # repeatable under the same seed even though two sub-runs are involved
    again = mc_operator_probe(spec, f, 1, OracleConfig(samples=2000, seed=17))
    assert est == again


def test_operator_probe_rejects_the_maximal_kind():
    f = RadialStepFunction.indicator_ball(CTX, 0)
    with pytest.raises(DomainError):
        mc_operator_probe(OperatorSpec("maximal"), f, 0, OracleConfig(samples=1000, seed=1))


def test_naive_and_stratified_share_the_target():
    """Both sampling modes estimate the same integral, each within its bar."""
    f = RadialStepFunction(CTX, (-2, 2), (0.5, 1.5, -1.0, 2.0, 0.25))
    exact = ball_integral(f, 2)
    plain = mc_integrate(f, 2, OracleConfig(samples=30_000, seed=14, stratified=False))
    layered = mc_integrate(f, 2, OracleConfig(samples=1000, seed=14))
    assert abs(plain.value - exact) <= 4.0 * plain.std_error
    assert abs(layered.value - exact) <= 1e-9 * max(1.0, abs(exact))
