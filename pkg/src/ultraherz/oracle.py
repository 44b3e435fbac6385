"""Monte Carlo cross-checks for shell integrals, norms, and operators.

This module deliberately avoids the closed-form shell sums used everywhere
else: it draws actual points with exact rational coordinates, evaluates
functions at them, and aggregates. Agreement with the analytic code is then
a genuine end-to-end check of the geometry (shell classification, measures,
sampling) rather than a reprint of the same formulas.

Two regimes are supported. Stratified sampling (the default) allocates the
budget proportionally to shell measures inside a truncation window, pooling
everything below it into one residual ball stratum; for radial integrands
each sphere stratum has zero variance, so the estimate is near-exact and
the reported standard error collapses. Plain uniform sampling over the ball
(``stratified=False``) has honest 1/sqrt(N) statistics and is what the
3-sigma comparisons in the test-suite use.

Standard errors are computed from within-stratum sample variances and merged
in quadrature. Strata that receive fewer than two points report zero
variance; with the radial integrands used here those strata are constant,
so nothing is lost.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

from .errors import DomainError
from .norms import _solve_luxemburg
from .operators import OperatorSpec
from .padic import PadicContext, PadicPoint, ppow, sample_uniform
from .radial import ExponentFunction, RadialStepFunction, combine

_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class OracleConfig:
    """Sampling configuration.

    ``truncation_window`` bounds the shells that stratified estimates
    resolve individually; everything below its lower edge is pooled into a
    single residual ball stratum, and analytic bias bounds cover mass above
    the upper edge where applicable.
    """

    samples: int = 10_000
    resolution: int = 24
    truncation_window: tuple[int, int] = (-32, 32)
    seed: int | None = None
    stratified: bool = True

    def __post_init__(self) -> None:
        if self.samples < 1000:
            raise DomainError(
                f"oracle estimates need at least 1000 samples, got {self.samples}"
            )
        if self.resolution < 1:
            raise DomainError("resolution must be a positive digit count")
        lo, hi = self.truncation_window
        if lo >= hi:
            raise DomainError(
                f"truncation window {self.truncation_window} is empty"
            )


@dataclass(frozen=True)
class MCEstimate:
    value: float
    std_error: float
    samples: int


def _child_seed(seed: int | None, index: int) -> int | None:
    if seed is None:
        return None
    return (seed * _SEED_STRIDE + index) % (2**63)


def _allocate(total: int, weights: list[float]) -> list[int]:
    """Largest-remainder allocation of ``total`` draws, at least one each."""
    mass = sum(weights)
    if mass <= 0.0:
        raise DomainError("stratified allocation needs positive total measure")
    quotas = [total * w / mass for w in weights]
    counts = [int(q) for q in quotas]
    short = total - sum(counts)
    by_remainder = sorted(
        range(len(weights)), key=lambda i: quotas[i] - counts[i], reverse=True
    )
    for i in by_remainder[:short]:
        counts[i] += 1
    return [max(1, c) for c in counts]


def _stratum_stats(
    values: list[float],
) -> tuple[float, float]:
    """Sample mean and variance (zero variance below two points)."""
    k = len(values)
    mean = sum(values) / k
    if k < 2:
        return mean, 0.0
    var = sum((v - mean) ** 2 for v in values) / (k - 1)
    return mean, var


def _sample_stratum(
    region: str,
    gamma: int,
    count: int,
    ctx: PadicContext,
    resolution: int,
    rng: random.Random,
) -> list[PadicPoint]:
    return [
        sample_uniform(region, gamma, ctx, resolution=resolution, rng=rng)
        for _ in range(count)
    ]


def mc_integrate(
    f: RadialStepFunction, gamma: int, config: OracleConfig
) -> MCEstimate:
    """Estimate the integral of f over the ball B_gamma.

    Examples:
        >>> ctx = PadicContext(2, 1)
        >>> f = RadialStepFunction.indicator_ball(ctx, 0)
        >>> est = mc_integrate(f, 0, OracleConfig(samples=1000, seed=7))
        >>> round(est.value, 9)
        1.0
    """
    ctx = f.ctx
    ctx.check_shell(gamma, what="integration radius")
    p, n = ctx.p, ctx.n
    rng = random.Random(config.seed)

    if not config.stratified:
        measure = ppow(p, n * gamma)
        points = _sample_stratum("ball", gamma, config.samples, ctx, config.resolution, rng)
        values = [f.value_at(x) for x in points]
        mean, var = _stratum_stats(values)
        return MCEstimate(
            measure * mean,
            measure * math.sqrt(var / config.samples),
            config.samples,
        )

    lo = min(config.truncation_window[0], f.window[0])
    strata: list[tuple[str, int, float]] = []
    if gamma >= lo:
        strata.append(("ball", lo - 1, ppow(p, n * (lo - 1))))
        mass = float(1 - (1 / p) ** n)
        for j in range(lo, gamma + 1):
            strata.append(("sphere", j, mass * ppow(p, n * j)))
    else:
        strata.append(("ball", gamma, ppow(p, n * gamma)))

    counts = _allocate(config.samples, [w for _, _, w in strata])
    value = 0.0
    variance = 0.0
    drawn = 0
    for (region, j, measure), count in zip(strata, counts):
        points = _sample_stratum(region, j, count, ctx, config.resolution, rng)
        values = [f.value_at(x) for x in points]
        mean, var = _stratum_stats(values)
        value += measure * mean
        variance += measure**2 * var / count
        drawn += count
    return MCEstimate(value, math.sqrt(variance), drawn)


def mc_luxemburg(
    f: RadialStepFunction,
    u: ExponentFunction,
    config: OracleConfig,
    rel_tol: float = 1e-10,
) -> MCEstimate:
    """Estimate the Luxemburg norm by inverting a sampled modular.

    Points are drawn once and shared across all trial levels lam (common
    random numbers), so the sampled modular is a smooth decreasing function
    of lam and bisection applies unchanged. The standard error of the root
    is propagated from the modular's standard error through a central
    finite-difference derivative at the root.

    Functions with a nonzero outer tail get an analytic bias bound for the
    mass above the truncation window folded into the standard error; the
    inner tail is covered by the residual ball stratum itself.
    """
    if f.ctx != u.ctx:
        raise DomainError("function and exponent live in different contexts")
    ctx = f.ctx
    p, n = ctx.p, ctx.n
    rng = random.Random(config.seed)
    lo = min(config.truncation_window[0], f.window[0], u.window[0])
    hi = max(config.truncation_window[1], f.window[1], u.window[1])
    mass = float(1 - (1 / p) ** n)

    strata: list[tuple[str, int, float, float]] = [
        ("ball", lo - 1, ppow(p, n * (lo - 1)), u.u_inner)
    ]
    for j in range(lo, hi + 1):
        strata.append(("sphere", j, mass * ppow(p, n * j), u.evaluate(j)))

    counts = _allocate(config.samples, [w for _, _, w, _ in strata])
    drawn: list[tuple[float, float, list[float], int]] = []
    total = 0
    for (region, j, measure, exponent), count in zip(strata, counts):
        points = _sample_stratum(region, j, count, ctx, config.resolution, rng)
        drawn.append((measure, exponent, [abs(f.value_at(x)) for x in points], count))
        total += count

    def modular_hat(lam: float) -> float:
        acc = 0.0
        for measure, exponent, magnitudes, _ in drawn:
            acc += measure * sum(
                (a / lam) ** exponent for a in magnitudes
            ) / len(magnitudes)
        return acc

    if modular_hat(1.0) == 0.0:
        return MCEstimate(0.0, 0.0, total)

    bias_at = None
    amplitude, rate = f.outer_tail
    if amplitude != 0.0:
        s = rate * u.u_infinity + n
        if s >= 0:
            raise DomainError(
                "sampled modular cannot converge: outer tail makes the norm infinite"
            )

        def bias_at(lam: float) -> float:
            return (
                (abs(amplitude) / lam) ** u.u_infinity
                * mass
                * ppow(p, s * (hi + 1))
                / (1.0 - ppow(p, s))
            )

    root, half = _solve_luxemburg(modular_hat, rel_tol)
    variance = 0.0
    for measure, exponent, magnitudes, count in drawn:
        _, var = _stratum_stats([(a / root) ** exponent for a in magnitudes])
        variance += measure**2 * var / count
    sigma_mod = math.sqrt(variance)
    if bias_at is not None:
        sigma_mod += bias_at(root)

    h = 1e-6
    slope = (modular_hat(root * (1 + h)) - modular_hat(root * (1 - h))) / (2 * root * h)
    sigma_root = sigma_mod / max(abs(slope), 1e-300) + half
    return MCEstimate(root, sigma_root, total)


def mc_operator_probe(
    spec: OperatorSpec,
    f: RadialStepFunction,
    shell: int,
    config: OracleConfig,
) -> MCEstimate:
    """Estimate (T f)(x) for |x| = p**shell by sampling the defining integral.

    Supports the hardy, adjoint, and commutator kinds; the maximal operator
    has no integral representation to sample and raises DomainError. The
    commutator runs two sub-estimates with derived seeds and merges their
    errors in quadrature.
    """
    ctx = f.ctx
    ctx.check_shell(shell, what="probe shell")
    p, n = ctx.p, ctx.n
    alpha = spec.alpha

    if spec.kind == "hardy":
        scale = ppow(p, shell * (alpha - n))
        est = mc_integrate(f, shell, config)
        return MCEstimate(scale * est.value, scale * est.std_error, est.samples)

    if spec.kind == "adjoint":
        rng = random.Random(config.seed)
        hi = max(config.truncation_window[1], f.window[1])
        mass = float(1 - (1 / p) ** n)
        amplitude, rate = f.outer_tail
        bias = 0.0
        if amplitude != 0.0:
            s = rate + alpha
            if s >= 0:
                raise DomainError(
                    f"outer tail rate {rate} with order {alpha} makes the "
                    f"defining integral divergent (needs rate + alpha < 0)"
                )
            bias = abs(amplitude) * mass * ppow(p, s * (hi + 1)) / (1.0 - ppow(p, s))
        shells = list(range(shell + 1, hi + 1))
        if not shells:
            return MCEstimate(0.0, bias, 0)
        weights = [mass * ppow(p, n * j) for j in shells]
        counts = _allocate(config.samples, weights)
        value = 0.0
        variance = 0.0
        drawn = 0
        for j, weight, count in zip(shells, weights, counts):
            points = _sample_stratum("sphere", j, count, ctx, config.resolution, rng)
            factor = ppow(p, j * (alpha - n))
            values = [f.value_at(x) * factor for x in points]
            mean, var = _stratum_stats(values)
            value += weight * mean
            variance += weight**2 * var / count
            drawn += count
        return MCEstimate(value, math.sqrt(variance) + bias, drawn)

    if spec.kind == "commutator":
        assert spec.symbol is not None
        scale = ppow(p, shell * (alpha - n))
        b_val = spec.symbol.evaluate(shell)
        first = mc_integrate(
            f, shell, replace(config, seed=_child_seed(config.seed, 1))
        )
        second = mc_integrate(
            combine(spec.symbol, f, "multiply"),
            shell,
            replace(config, seed=_child_seed(config.seed, 2)),
        )
        value = scale * (b_val * first.value - second.value)
        sigma = scale * math.hypot(b_val * first.std_error, second.std_error)
        return MCEstimate(value, sigma, first.samples + second.samples)

    raise DomainError(
        "the maximal operator has no integral representation to probe"
    )
