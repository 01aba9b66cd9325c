from fractions import Fraction

import numpy as np
import pytest

from feecproj.forms import (
    PolynomialForm,
    alternators,
    eval_components,
    exterior_derivative as d,
    inner_product,
    integrate_over_simplex,
    koszul,
    pullback_affine,
    random_form,
    wedge,
)
from feecproj.polynomial import Polynomial

X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)
DX = PolynomialForm.basic(2, (0,))
DY = PolynomialForm.basic(2, (1,))


def test_wedge_basics():
    assert wedge(DX, DY) == PolynomialForm.basic(2, (0, 1))
    assert wedge(DX, DX).is_zero()
    xdy = DY.scalar_multiply(X)
    ydx = DX.scalar_multiply(Y)
    expect = PolynomialForm(2, 2, {(0, 1): (X * Y).scale(-1)})
    assert wedge(xdy, ydx) == expect


def test_wedge_graded_anticommutativity():
    rng = np.random.default_rng(3)
    for n in (2, 3):
        for k in range(n + 1):
            for l in range(n - k + 1):
                a = random_form(rng, n, k, 2)
                b = random_form(rng, n, l, 2)
                lhs = wedge(a, b)
                rhs = wedge(b, a).scale((-1) ** (k * l))
                assert lhs == rhs


def test_exterior_derivative_examples():
    assert d(DY.scalar_multiply(X)) == PolynomialForm.basic(2, (0, 1))
    assert d(PolynomialForm.from_scalar(X * X)) == DX.scalar_multiply(X.scale(2))
    rot = DY.scalar_multiply(X) - DX.scalar_multiply(Y)
    assert d(rot) == PolynomialForm.basic(2, (0, 1), 2)


def test_d_squared_is_zero_exactly():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(0, n))
        a = random_form(rng, n, k, 3)
        assert d(d(a)).is_zero()


def test_leibniz_rule_exact():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(2, 4))
        k = int(rng.integers(0, n + 1))
        l = int(rng.integers(0, n - k + 1))
        a = random_form(rng, n, k, 2)
        b = random_form(rng, n, l, 2)
        lhs = d(wedge(a, b))
        rhs = wedge(d(a), b) + wedge(a, d(b)).scale((-1) ** k)
        assert lhs == rhs


def test_koszul_examples():
    area = PolynomialForm.basic(2, (0, 1))
    assert koszul(area) == DY.scalar_multiply(X) - DX.scalar_multiply(Y)
    assert koszul(DX) == PolynomialForm.from_scalar(X)
    rng = np.random.default_rng(13)
    for _ in range(25):
        n = int(rng.integers(2, 4))
        k = int(rng.integers(2, n + 1))
        a = random_form(rng, n, k, 2)
        assert koszul(koszul(a)).is_zero()


def test_koszul_rejects_zero_forms():
    from feecproj.errors import ZeroFormContraction

    with pytest.raises(ZeroFormContraction):
        koszul(PolynomialForm.from_scalar(X))


def test_pullback_linearity_and_determinant():
    mat = [[2, 1], [0, 3]]
    pulled = pullback_affine(mat, [0, 0], DX)
    assert pulled == PolynomialForm(2, 1, {(0,): Polynomial.constant(2, 2), (1,): Polynomial.constant(2, 1)})
    ident = pullback_affine([[1, 0], [0, 1]], [0, 0], DY.scalar_multiply(X))
    assert ident == DY.scalar_multiply(X)
    vol = PolynomialForm.volume(2)
    assert pullback_affine(mat, [1, 2], vol) == vol.scale(6)


def test_pullback_commutes_with_d():
    rng = np.random.default_rng(17)
    for _ in range(40):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(0, n))
        a = random_form(rng, n, k, 3)
        mat = rng.integers(-2, 3, size=(n, n)).tolist()
        b = rng.integers(-2, 3, size=n).tolist()
        assert pullback_affine(mat, b, d(a)) == d(pullback_affine(mat, b, a))


def test_pullback_functoriality():
    rng = np.random.default_rng(19)
    for _ in range(40):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(0, n + 1))
        a = random_form(rng, n, k, 2)
        A = rng.integers(-2, 3, size=(n, n)).tolist()
        bA = rng.integers(-2, 3, size=n).tolist()
        B = rng.integers(-2, 3, size=(n, n)).tolist()
        bB = rng.integers(-2, 3, size=n).tolist()
        # (A o B)(u) = A(B u + bB) + ... so pullback composes in reverse
        AB = (np.array(A) @ np.array(B)).tolist()
        bAB = (np.array(A) @ np.array(bB) + np.array(bA)).tolist()
        lhs = pullback_affine(AB, bAB, a)
        rhs = pullback_affine(B, bB, pullback_affine(A, bA, a))
        assert lhs == rhs


def test_traces_onto_edges():
    # trace of dy onto the edge {y = 0}, parametrized by x -> (x, 0)
    chart = ([[1], [0]], [0, 0])
    assert pullback_affine(chart[0], chart[1], DY).is_zero()
    # trace of dx onto the same edge is dt
    assert pullback_affine(chart[0], chart[1], DX) == PolynomialForm.basic(1, (0,))
    # trace of x dy onto the diagonal t -> (t, t) is t dt
    diag = ([[1], [1]], [0, 0])
    t = Polynomial.variable(1, 0)
    assert pullback_affine(diag[0], diag[1], DY.scalar_multiply(X)) == PolynomialForm(
        1, 1, {(0,): t}
    )
    # forms of degree above the face dimension restrict to zero
    assert pullback_affine(diag[0], diag[1], PolynomialForm.volume(2)).is_zero()


def test_eval_components_ordering():
    a = DY.scalar_multiply(X) - DX.scalar_multiply(Y)
    pts = np.array([[1.0, 2.0], [0.5, 0.25]])
    vals = eval_components(a, pts)
    assert alternators(1, 2) == ((0,), (1,))
    assert np.allclose(vals, [[-2.0, 1.0], [-0.25, 0.5]])


def test_integrate_over_simplex_oriented():
    seg = [(0.0,), (1.0,)]
    one_form = PolynomialForm.basic(1, (0,))
    assert integrate_over_simplex(one_form, seg) == 1
    assert integrate_over_simplex(one_form, seg[::-1]) == -1
    tri = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
    vol = PolynomialForm.volume(2)
    assert integrate_over_simplex(vol, tri) == Fraction(1, 2)
    swapped = [tri[1], tri[0], tri[2]]
    assert integrate_over_simplex(vol, swapped) == Fraction(-1, 2)


def test_inner_product_matches_components():
    rng = np.random.default_rng(23)
    a = random_form(rng, 3, 2, 2)
    b = random_form(rng, 3, 2, 2)
    pts = rng.random((20, 3))
    ip = inner_product(a, b).eval(pts)
    direct = np.sum(eval_components(a, pts) * eval_components(b, pts), axis=1)
    assert np.allclose(ip, direct, atol=1e-12)
