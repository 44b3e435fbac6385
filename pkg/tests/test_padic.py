"""Valuations, measures, and Haar sampling on the p-adic coordinate space."""

import math
import random
from fractions import Fraction

import pytest

from ultraherz import (
    DomainError,
    PadicContext,
    PadicPoint,
    ball_measure,
    fraction_valuation,
    padic_valuation,
    ppow,
    sample_uniform,
    sphere_measure,
)

# Upper 1% points of the chi-square distribution for the digit tests.
CHI2_99 = {1: 6.635, 3: 11.345, 5: 15.086}


def test_ppow_integer_exponents_are_exact():
    assert ppow(2, 10) == 1024.0
    assert ppow(3, 0) == 1.0
    assert ppow(5, -2) == 1.0 / 25.0
    assert ppow(2, 0.5) == pytest.approx(math.sqrt(2.0), rel=1e-15)


def test_ppow_saturates_instead_of_overflowing():
    assert ppow(2, 5000) == math.inf
    assert ppow(2, -5000) == 0.0


def test_padic_valuation_basics():
    ctx = PadicContext(2, 1)
    assert padic_valuation(12, 1, ctx) == 2
    assert padic_valuation(1, 8, ctx) == -3
    assert padic_valuation(0, 1, ctx) == math.inf
    assert fraction_valuation(Fraction(9, 2), PadicContext(3, 1)) == 2


def test_measures_are_exact_fractions():
    ctx = PadicContext(2, 1)
    assert ball_measure(0, ctx) == Fraction(1)
    assert ball_measure(-3, ctx) == Fraction(1, 8)
    assert sphere_measure(0, ctx) == Fraction(1, 2)
    ctx2 = PadicContext(3, 2)
    assert ball_measure(2, ctx2) == Fraction(3) ** 4
    assert sphere_measure(2, ctx2) == Fraction(3) ** 4 * (1 - Fraction(1, 9))


def test_ball_is_disjoint_union_of_spheres_small_range():
    for p in (2, 5):
        for n in (1, 2):
            ctx = PadicContext(p, n)
            for gamma in range(-6, 7):
                total = sum(sphere_measure(j, ctx) for j in range(-40, gamma + 1))
                # the tail below -40 is the ball B_-41
                assert ball_measure(gamma, ctx) == total + ball_measure(-41, ctx)


def test_context_rejects_bad_parameters():
    with pytest.raises(DomainError):
        PadicContext(4, 1)
    with pytest.raises(DomainError):
        PadicContext(2, 0)


def test_point_shell_and_norm():
    ctx = PadicContext(2, 2)
    x = PadicPoint.from_rationals(ctx, (Fraction(3, 4), Fraction(6)))
    # valuations are -2 and 1, the max norm is 2**2
    assert x.shell == 2
    assert x.vector_norm() == Fraction(4)
    zero = PadicPoint.from_rationals(ctx, (0, 0))
    assert zero.shell is None
    assert zero.vector_norm() == 0


def test_scale_by_p_power_shifts_the_shell():
    ctx = PadicContext(3, 1)
    x = PadicPoint.from_rationals(ctx, (Fraction(2),))
    assert x.shell == 0
    assert x.scale_by_p_power(2).shell == -2
    assert x.scale_by_p_power(-1).shell == 1


def test_sample_uniform_respects_the_region():
    ctx = PadicContext(3, 2)
    rng = random.Random(101)
    for _ in range(200):
        gamma = rng.randint(-5, 5)
        on_sphere = sample_uniform("sphere", gamma, ctx, rng=rng)
        assert on_sphere.shell == gamma
        in_ball = sample_uniform("ball", gamma, ctx, rng=rng)
        assert in_ball.shell is None or in_ball.shell <= gamma


def test_sample_uniform_seed_reproducibility():
    ctx = PadicContext(2, 1)
    a = sample_uniform("ball", 0, ctx, seed=42)
    b = sample_uniform("ball", 0, ctx, seed=42)
    assert a.coords == b.coords


def test_sphere_mass_split_between_shells_inside_ball():
    """Ball draws land on shell j with probability |S_j| / |B_gamma|."""
    ctx = PadicContext(2, 1)
    rng = random.Random(7)
    draws = 4000
    gamma = 0
    hits = 0
    for _ in range(draws):
        x = sample_uniform("ball", gamma, ctx, rng=rng)
        if x.shell == gamma:
            hits += 1
    expect = float(sphere_measure(gamma, ctx) / ball_measure(gamma, ctx))
    observed = hits / draws
    sigma = math.sqrt(expect * (1 - expect) / draws)
    assert abs(observed - expect) < 4 * sigma


@pytest.mark.parametrize(
    "p, digit_index, df",
    [(2, 1, 1), (5, 0, 3), (7, 0, 5)],
)
def test_sphere_digit_uniformity(p, digit_index, df):
    """Digits of sphere draws follow the uniform law their position demands.

    The leading digit of the unit part is uniform over 1..p-1 and the later
    digits over 0..p-1; a chi-square test at the 1% level catches a skewed
    sampler. The seed is fixed, so the test is deterministic.
    """
    ctx = PadicContext(p, 1)
    rng = random.Random(31 + p)
    draws = 3000
    counts: dict[int, int] = {}
    for _ in range(draws):
        x = sample_uniform("sphere", 0, ctx, rng=rng)
        d = x.digits(0)[digit_index]
        counts[d] = counts.get(d, 0) + 1
    support = range(1, p) if digit_index == 0 else range(p)
    assert set(counts) <= set(support)
    expected = draws / len(support)
    chi2 = sum((counts.get(d, 0) - expected) ** 2 / expected for d in support)
    assert chi2 < CHI2_99[df]


def test_check_shell_guards_the_truncation_limit():
    ctx = PadicContext(2, 1)
    assert ctx.check_shell(10) == 10
    with pytest.raises(DomainError):
        ctx.check_shell(ctx.shell_limit + 1)
