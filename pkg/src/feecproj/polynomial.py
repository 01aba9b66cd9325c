"""Multivariate polynomials with exact rational coefficients.

The calculus layer (exterior derivative, wedge, contraction, pullback,
traces, unisolvence solves) runs entirely on Fractions; floats appear
only when a polynomial is evaluated at quadrature nodes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import numpy as np

Monomial = tuple  # exponent tuple, one entry per variable


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))  # exact binary value
    raise TypeError(f"cannot use {type(x)} as an exact coefficient")


class Polynomial:
    """Polynomial in n variables, stored as monomial -> Fraction."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs: dict[Monomial, Fraction] = {}
        if coeffs:
            for mono, c in coeffs.items():
                c = _as_fraction(c)
                if c != 0:
                    self.coeffs[tuple(mono)] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, n: int, value) -> "Polynomial":
        return cls(n, {(0,) * n: _as_fraction(value)})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        mono = tuple(1 if j == i else 0 for j in range(n))
        return cls(n, {mono: Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.coeffs), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        parts = []
        for mono, c in sorted(self.coeffs.items()):
            vars_ = "*".join(f"x{i}^{e}" for i, e in enumerate(mono) if e)
            parts.append(f"{c}{'*' + vars_ if vars_ else ''}")
        return "Polynomial(" + " + ".join(parts) + ")"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial(self.n, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self.coeffs.items()})

    def scale(self, factor) -> "Polynomial":
        factor = _as_fraction(factor)
        if factor == 0:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {m: factor * c for m, c in self.coeffs.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Polynomial(self.n, out)

    def power(self, e: int) -> "Polynomial":
        out = Polynomial.constant(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    # -- calculus ----------------------------------------------------------

    def partial(self, i: int) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.coeffs.items():
            e = mono[i]
            if e == 0:
                continue
            new = list(mono)
            new[i] = e - 1
            out[tuple(new)] = c * e
        return Polynomial(self.n, out)

    def compose_affine(self, mat, offset) -> "Polynomial":
        """Substitute x_i = sum_j mat[i][j] u_j + offset[i].

        mat is n rows by m columns of exact values; the result is a
        polynomial in m variables.
        """
        if self.n == 0:
            return Polynomial(0, dict(self.coeffs))
        m = len(mat[0])
        images = []
        for i in range(self.n):
            coeffs = {}
            b = _as_fraction(offset[i])
            if b:
                coeffs[(0,) * m] = b
            for j in range(m):
                a = _as_fraction(mat[i][j])
                if a:
                    mono = tuple(1 if jj == j else 0 for jj in range(m))
                    coeffs[mono] = a
            images.append(Polynomial(m, coeffs))
        out = Polynomial.zero(m)
        # reuse powers of each image across monomials
        max_exp = [0] * self.n
        for mono in self.coeffs:
            for i, e in enumerate(mono):
                max_exp[i] = max(max_exp[i], e)
        pows = []
        for i in range(self.n):
            pi = [Polynomial.constant(m, 1)]
            for e in range(max_exp[i]):
                pi.append(pi[-1] * images[i])
            pows.append(pi)
        for mono, c in self.coeffs.items():
            term = Polynomial.constant(m, c)
            for i, e in enumerate(mono):
                if e:
                    term = term * pows[i][e]
            out = out + term
        return out

    # -- evaluation ---------------------------------------------------------

    def eval_exact(self, point) -> Fraction:
        point = [_as_fraction(x) for x in point]
        total = Fraction(0)
        for mono, c in self.coeffs.items():
            term = c
            for x, e in zip(point, mono):
                term *= x**e
            total += term
        return total

    def eval(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at float points of shape (P, n)."""
        points = np.asarray(points, dtype=float).reshape(-1, self.n)
        out = np.zeros(points.shape[0])
        for mono, c in self.coeffs.items():
            term = np.full(points.shape[0], float(c))
            for i, e in enumerate(mono):
                if e:
                    term *= points[:, i] ** e
            out += term
        return out

    def integral_over_reference_simplex(self) -> Fraction:
        """Exact integral over the reference n-simplex."""
        total = Fraction(0)
        for mono, c in self.coeffs.items():
            num = 1
            for e in mono:
                num *= math.factorial(e)
            total += c * Fraction(num, math.factorial(sum(mono) + self.n))
        return total


def monomial_basis(n: int, degree: int, homogeneous: bool = False):
    """All monomials of total degree <= degree (or == degree)."""
    out = []
    for mono in product(range(degree + 1), repeat=n):
        total = sum(mono)
        if total == degree if homogeneous else total <= degree:
            out.append(mono)
    out.sort(key=lambda m: (sum(m), m))
    return out


def random_polynomial(rng: np.random.Generator, n: int, degree: int, span: int = 3) -> Polynomial:
    """Small random polynomial with integer coefficients in [-span, span]."""
    coeffs = {}
    for mono in monomial_basis(n, degree):
        c = int(rng.integers(-span, span + 1))
        if c:
            coeffs[mono] = Fraction(c)
    if not coeffs:
        coeffs[(0,) * n] = Fraction(1)
    return Polynomial(n, coeffs)
