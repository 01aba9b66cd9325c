"""Quadrature on reference simplices and unit balls.

Simplex rules use the Grundmann-Moller construction with exact rational
weights, so polynomial exactness holds to floating-point roundoff.  Ball
rules are spherical products (radial Gauss-Legendre times equispaced
angles / Gauss in the polar cosine).  A radially graded variant resolves
the flat decay of the standard mollifier bump at the ball boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import UnsupportedDegree

MAX_SIMPLEX_DEGREE = 24
#: number of geometric refinements toward |y| = 1 in the graded radial rule
GRADING_LEVELS = 8


@dataclass(frozen=True)
class QuadratureRule:
    """Positive-measure integration rule on a reference domain.

    ``domain_kind`` is ``"simplex(m)"`` or ``"ball(n)"``; ``points`` has
    shape (Q, m) and ``weights`` shape (Q,).  The rule integrates all
    polynomials of total degree <= ``exact_degree`` over the reference
    domain.
    """

    domain_kind: str
    points: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def __post_init__(self):
        object.__setattr__(self, "points", np.ascontiguousarray(self.points, dtype=float))
        object.__setattr__(self, "weights", np.ascontiguousarray(self.weights, dtype=float))

    def __len__(self):
        return self.weights.shape[0]

    def integrate(self, f) -> float:
        """Integrate a callable f(points)->(Q,) over the reference domain."""
        return float(self.weights @ np.asarray(f(self.points), dtype=float))


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


@lru_cache(maxsize=None)
def _grundmann_moller(m: int, s: int):
    """Grundmann-Moller rule of degree 2s+1 on the unit simplex in R^m.

    Weights are assembled as exact fractions; the rule integrates over
    {x >= 0, sum(x) <= 1} whose measure is 1/m!.
    """
    d = 2 * s + 1
    pts = []
    wts = []
    for i in range(s + 1):
        denom = d + m - 2 * i
        w = (
            Fraction(-1) ** i
            * Fraction(denom**d, 4**s)
            / (math.factorial(i) * math.factorial(d + m - i))
        )
        for beta in _compositions(s - i, m + 1):
            bary = [Fraction(2 * b + 1, denom) for b in beta]
            pts.append([float(x) for x in bary[1:]])
            wts.append(float(w))
    points = np.array(pts, dtype=float).reshape(len(wts), m)
    return points, np.array(wts, dtype=float)


def simplex_rule(m: int, degree: int) -> QuadratureRule:
    """Rule exact to `degree` on the reference m-simplex, 0 <= m <= 3."""
    if not 0 <= m <= 3:
        raise UnsupportedDegree(f"simplex dimension {m} not supported")
    if not 0 <= degree <= MAX_SIMPLEX_DEGREE:
        raise UnsupportedDegree(f"simplex rule degree {degree} not supported")
    if m == 0:
        return QuadratureRule("simplex(0)", np.zeros((1, 0)), np.ones(1), degree)
    s = max(0, (degree - 1 + 1) // 2)  # smallest s with 2s+1 >= degree
    points, weights = _grundmann_moller(m, s)
    return QuadratureRule(f"simplex({m})", points, weights, 2 * s + 1)


def gauss_legendre(npts: int, a: float = -1.0, b: float = 1.0):
    """Gauss-Legendre nodes/weights on [a, b]."""
    x, w = np.polynomial.legendre.leggauss(npts)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def _angular_rule(degree: int):
    """Equispaced rule on the circle, exact for trig degree and symmetric."""
    npts = 2 * ((degree + 2) // 2)  # even, >= degree + 1
    theta = 2.0 * np.pi * np.arange(npts) / npts
    w = np.full(npts, 2.0 * np.pi / npts)
    return theta, w


def _sphere_rule(degree: int):
    """Product rule on S^2 exact for polynomials of the given degree."""
    n_u = (degree + 2) // 2
    u, wu = np.polynomial.legendre.leggauss(max(n_u, 1))
    theta, wt = _angular_rule(degree)
    su = np.sqrt(1.0 - u**2)
    pts = np.empty((u.size * theta.size, 3))
    w = np.empty(u.size * theta.size)
    idx = 0
    for iu in range(u.size):
        pts[idx : idx + theta.size, 0] = su[iu] * np.cos(theta)
        pts[idx : idx + theta.size, 1] = su[iu] * np.sin(theta)
        pts[idx : idx + theta.size, 2] = u[iu]
        w[idx : idx + theta.size] = wu[iu] * wt
        idx += theta.size
    return pts, w


def _radial_segments(graded: bool):
    if not graded:
        return [(0.0, 1.0)]
    cuts = [1.0 - 0.5**j for j in range(GRADING_LEVELS + 1)] + [1.0]
    return list(zip(cuts[:-1], cuts[1:]))


def _ball_from_radial(n: int, degree: int, graded: bool) -> QuadratureRule:
    if n not in (1, 2, 3):
        raise UnsupportedDegree(f"ball dimension {n} not supported")
    if degree < 0:
        raise UnsupportedDegree("negative quadrature degree")
    n_r = max(2, (degree + n + 2) // 2)
    segments = _radial_segments(graded)
    r_all, wr_all = [], []
    for a, b in segments:
        r, wr = gauss_legendre(n_r, a, b)
        r_all.append(r)
        wr_all.append(wr * r ** (n - 1))
    r = np.concatenate(r_all)
    wr = np.concatenate(wr_all)

    if n == 1:
        pts = np.concatenate([r, -r])[:, None]
        w = np.concatenate([wr, wr])
    elif n == 2:
        theta, wt = _angular_rule(degree)
        pts = np.empty((r.size * theta.size, 2))
        w = np.empty(r.size * theta.size)
        idx = 0
        for ir in range(r.size):
            pts[idx : idx + theta.size, 0] = r[ir] * np.cos(theta)
            pts[idx : idx + theta.size, 1] = r[ir] * np.sin(theta)
            w[idx : idx + theta.size] = wr[ir] * wt
            idx += theta.size
    else:
        spts, sw = _sphere_rule(degree)
        pts = (r[:, None, None] * spts[None, :, :]).reshape(-1, 3)
        w = (wr[:, None] * sw[None, :]).reshape(-1)
    kind = f"ball({n})"
    return QuadratureRule(kind, pts, w, degree)


def ball_rule(n: int, degree: int) -> QuadratureRule:
    """Rule exact to `degree` on the closed unit ball in R^n."""
    return _ball_from_radial(n, degree, graded=False)


def graded_ball_rule(n: int, degree: int) -> QuadratureRule:
    """Ball rule with geometric radial grading toward |y| = 1.

    The extra radial resolution targets integrands that are smooth but
    flat at the boundary, like the standard mollifier bump.
    """
    return _ball_from_radial(n, degree, graded=True)


def bump(r2):
    """exp(-1/(1-r2)) for r2 < 1, else 0; vectorized in r2 = |y|^2."""
    r2 = np.asarray(r2, dtype=float)
    out = np.zeros_like(r2)
    inside = r2 < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - r2[inside]))
    return out


def integrate_mollifier(n: int, rule_degree: int = 12) -> float:
    """Integral of exp(-(1-|y|^2)^{-1}) over the unit ball in R^n."""
    rule = graded_ball_rule(n, rule_degree)
    r2 = np.sum(rule.points**2, axis=1)
    return float(rule.weights @ bump(r2))


@lru_cache(maxsize=None)
def mollifier_constant(n: int) -> float:
    """Normalization C_mu making the standard mollifier integrate to one."""
    return 1.0 / integrate_mollifier(n, rule_degree=16)


def mollifier_values(n: int, points: np.ndarray) -> np.ndarray:
    """The standard mollifier mu(y) = C_mu exp(-(1-|y|^2)^{-1}), 0 outside."""
    pts = np.asarray(points, dtype=float).reshape(-1, n)
    return mollifier_constant(n) * bump(np.sum(pts**2, axis=1))


@lru_cache(maxsize=None)
def mollifier_rule(n: int, degree: int):
    """Graded ball rule with the mollifier folded into the weights.

    Returns (points, weights) with sum(weights) == 1 exactly, so that
    averaging against this rule reproduces constants bit-for-bit.
    """
    rule = graded_ball_rule(n, degree)
    w = rule.weights * mollifier_values(n, rule.points)
    w = w / w.sum()
    big = int(np.argmax(w))
    for _ in range(4):  # absorb the normalization residual into one weight
        residual = w.sum() - 1.0
        if residual == 0.0:
            break
        w[big] -= residual
    pts = rule.points.copy()
    pts.setflags(write=False)
    w.setflags(write=False)
    return pts, w


def ball_volume(n: int) -> float:
    """Lebesgue measure of the unit ball in R^n."""
    return math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)


def simplex_measure(m: int) -> float:
    """Lebesgue measure 1/m! of the reference m-simplex."""
    return 1.0 / math.factorial(m)
