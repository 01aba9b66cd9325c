import math
from itertools import product

import numpy as np
import pytest

from feecproj import quadrature as quad


def exact_simplex_monomial(alpha):
    """Iterated-integral oracle: int_{simplex} prod x_i^a_i."""
    m = len(alpha)
    num = 1
    for a in alpha:
        num *= math.factorial(a)
    return num / math.factorial(sum(alpha) + m)


def exact_ball_monomial(alpha):
    """Polar-coordinate oracle: int_{unit ball} prod y_i^a_i."""
    if any(a % 2 for a in alpha):
        return 0.0
    n = len(alpha)
    s = sum(alpha)
    num = 2.0
    for a in alpha:
        num *= math.gamma((a + 1) / 2.0)
    return num / ((s + n) * math.gamma((s + n) / 2.0))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_simplex_weight_sum(m):
    for degree in (0, 3, 8, 15, 20):
        rule = quad.simplex_rule(m, degree)
        assert abs(rule.weights.sum() - quad.simplex_measure(m)) <= 1e-13 / math.factorial(m)


def test_simplex_rule_examples():
    # area of the reference triangle
    r = quad.simplex_rule(2, 0)
    assert abs(r.weights.sum() - 0.5) < 1e-14
    # monomial moment int_{T^2} x dx dy = 1/6
    r = quad.simplex_rule(2, 1)
    assert abs(r.integrate(lambda p: p[:, 0]) - 1.0 / 6.0) < 1e-14
    # int_{T^3} xyz = 1/720, frozen from the iterated-integral oracle
    assert exact_simplex_monomial((1, 1, 1)) == pytest.approx(1.0 / 720.0, abs=0)
    r = quad.simplex_rule(3, 3)
    val = r.integrate(lambda p: p[:, 0] * p[:, 1] * p[:, 2])
    assert abs(val - 1.0 / 720.0) < 1e-15


@pytest.mark.parametrize("m,degree", [(1, 7), (2, 6), (2, 11), (3, 8), (3, 13)])
def test_simplex_monomial_exactness(m, degree):
    rule = quad.simplex_rule(m, degree)
    for alpha in product(range(degree + 1), repeat=m):
        if sum(alpha) > degree:
            continue
        val = rule.integrate(lambda p: np.prod(p**np.array(alpha), axis=1))
        exact = exact_simplex_monomial(alpha)
        assert abs(val - exact) <= 1e-12 * max(1.0, abs(exact)) + 1e-15


def test_ball_rule_examples():
    r = quad.ball_rule(2, 0)
    assert abs(r.weights.sum() - math.pi) < 1e-13
    r = quad.ball_rule(2, 2)
    assert abs(r.integrate(lambda p: p[:, 0])) < 1e-14
    # polar-coordinate oracle gives pi/4 for the second moment
    assert exact_ball_monomial((2, 0)) == pytest.approx(math.pi / 4.0, abs=0)
    assert abs(r.integrate(lambda p: p[:, 0] ** 2) - math.pi / 4.0) < 1e-13


@pytest.mark.parametrize("n,degree", [(1, 9), (2, 8), (3, 7)])
def test_ball_monomial_exactness(n, degree):
    for rule in (quad.ball_rule(n, degree), quad.graded_ball_rule(n, degree)):
        assert abs(rule.weights.sum() - quad.ball_volume(n)) <= 1e-13 * quad.ball_volume(n)
        for alpha in product(range(degree + 1), repeat=n):
            if sum(alpha) > degree:
                continue
            val = rule.integrate(lambda p: np.prod(p**np.array(alpha), axis=1))
            exact = exact_ball_monomial(alpha)
            assert abs(val - exact) <= 1e-12 * max(1.0, abs(exact))


def test_ball_rules_are_centrally_symmetric():
    # odd moments cancel exactly, not just to quadrature accuracy
    for n in (1, 2, 3):
        pts, w = quad.mollifier_rule(n, 8)
        m1 = (w[:, None] * pts).sum(axis=0)
        assert np.abs(m1).max() < 1e-15


def test_mollifier_integral_reference_values():
    # adaptive quadrature oracle at two resolutions, n = 1
    lo = quad.integrate_mollifier(1, rule_degree=10)
    hi = quad.integrate_mollifier(1, rule_degree=18)
    assert abs(lo - hi) < 1e-8
    assert abs(hi - 0.443994) < 5e-6
    assert abs(quad.mollifier_constant(1) - 2.25228) < 5e-5
    # n = 2: same oracle, then the calibrated bump has unit integral
    lo2 = quad.integrate_mollifier(2, rule_degree=10)
    hi2 = quad.integrate_mollifier(2, rule_degree=18)
    assert abs(lo2 - hi2) < 1e-8
    rule = quad.graded_ball_rule(2, 14)
    total = rule.weights @ quad.mollifier_values(2, rule.points)
    assert abs(total - 1.0) < 1e-8


def test_mollifier_vanishes_outside_unit_ball():
    pts = np.array([[1.0, 0.0], [0.0, -1.2], [3.0, 4.0]])
    assert np.all(quad.mollifier_values(2, pts) == 0.0)


def test_mollifier_rule_unit_mass():
    for n in (1, 2, 3):
        _, w = quad.mollifier_rule(n, 8)
        assert w.sum() == 1.0
