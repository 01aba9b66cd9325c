"""Differential forms with exact polynomial coefficients.

A k-form on R^n is stored in the unique representation
``sum_sigma w_sigma dx^sigma`` over strictly increasing index tuples
sigma (0-based).  Wedge, exterior derivative, contraction with a radial
vector field, affine pullback and traces are all exact; evaluation at
float points produces component arrays ordered like ``alternators(k, n)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch, ZeroFormContraction
from .polynomial import Polynomial, _as_fraction, monomial_basis, random_polynomial


@lru_cache(maxsize=None)
def alternators(k: int, n: int):
    """Strictly increasing k-tuples from {0, ..., n-1}; ((),) for k = 0."""
    if k < 0 or k > n:
        return ()
    return tuple(combinations(range(n), k))


def _merge_sign(sigma, tau):
    """Sort the concatenation of two increasing tuples.

    Returns (sign, merged) with the permutation sign of the merge, or
    (0, None) if the tuples share an index.
    """
    merged = []
    sign = 1
    i = j = 0
    while i < len(sigma) and j < len(tau):
        a, b = sigma[i], tau[j]
        if a == b:
            return 0, None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # tau[j] jumps over the remaining entries of sigma
            if (len(sigma) - i) % 2:
                sign = -sign
            merged.append(b)
            j += 1
    merged.extend(sigma[i:])
    merged.extend(tau[j:])
    return sign, tuple(merged)


class PolynomialForm:
    """Differential k-form with exact polynomial coefficients."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs=None):
        self.n = n
        self.k = k
        self.coeffs: dict[tuple, Polynomial] = {}
        if coeffs:
            for sigma, poly in coeffs.items():
                sigma = tuple(sigma)
                if len(sigma) != k:
                    raise ValueError(f"alternator {sigma} has wrong length for a {k}-form")
                if not poly.is_zero():
                    self.coeffs[sigma] = poly

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, k: int) -> "PolynomialForm":
        return cls(n, k)

    @classmethod
    def from_scalar(cls, poly: Polynomial) -> "PolynomialForm":
        return cls(poly.n, 0, {(): poly})

    @classmethod
    def basic(cls, n: int, sigma, coeff=1) -> "PolynomialForm":
        """The form c * dx^sigma with a constant coefficient."""
        sigma = tuple(sigma)
        return cls(n, len(sigma), {sigma: Polynomial.constant(n, coeff)})

    @classmethod
    def volume(cls, n: int) -> "PolynomialForm":
        return cls.basic(n, tuple(range(n)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def component(self, sigma) -> Polynomial:
        return self.coeffs.get(tuple(sigma), Polynomial.zero(self.n))

    def degree(self) -> int:
        """Max total degree of the coefficients; -1 for the zero form."""
        return max((p.degree() for p in self.coeffs.values()), default=-1)

    def __eq__(self, other):
        if not isinstance(other, PolynomialForm):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = ", ".join(f"dx{sigma}: {p}" for sigma, p in sorted(self.coeffs.items()))
        return f"PolynomialForm(n={self.n}, k={self.k}, {{{terms}}})"

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "PolynomialForm") -> "PolynomialForm":
        self._check_same_space(other)
        out = dict(self.coeffs)
        for sigma, poly in other.coeffs.items():
            s = out.get(sigma)
            out[sigma] = poly if s is None else s + poly
        return PolynomialForm(self.n, self.k, out)

    def __sub__(self, other: "PolynomialForm") -> "PolynomialForm":
        return self + other.scale(-1)

    def scale(self, factor) -> "PolynomialForm":
        return PolynomialForm(
            self.n, self.k, {s: p.scale(factor) for s, p in self.coeffs.items()}
        )

    def scalar_multiply(self, poly: Polynomial) -> "PolynomialForm":
        return PolynomialForm(self.n, self.k, {s: poly * p for s, p in self.coeffs.items()})

    def _check_same_space(self, other: "PolynomialForm"):
        if self.n != other.n:
            raise DimensionMismatch(f"forms on R^{self.n} and R^{other.n}")
        if self.k != other.k:
            raise DimensionMismatch(f"cannot combine a {self.k}-form with a {other.k}-form")


def wedge(a: PolynomialForm, b: PolynomialForm) -> PolynomialForm:
    """Exterior product; graded anticommutative and exact."""
    if a.n != b.n:
        raise DimensionMismatch(f"forms on R^{a.n} and R^{b.n}")
    out: dict[tuple, Polynomial] = {}
    for sigma, pa in a.coeffs.items():
        for tau, pb in b.coeffs.items():
            sign, merged = _merge_sign(sigma, tau)
            if sign == 0:
                continue
            term = (pa * pb).scale(sign)
            s = out.get(merged)
            out[merged] = term if s is None else s + term
    return PolynomialForm(a.n, a.k + b.k, out)


def exterior_derivative(a: PolynomialForm) -> PolynomialForm:
    """d(sum w_sigma dx^sigma) = sum_i d_i w_sigma dx^i wedge dx^sigma."""
    out: dict[tuple, Polynomial] = {}
    for sigma, poly in a.coeffs.items():
        for i in range(a.n):
            dp = poly.partial(i)
            if dp.is_zero():
                continue
            sign, merged = _merge_sign((i,), sigma)
            if sign == 0:
                continue
            term = dp.scale(sign)
            s = out.get(merged)
            out[merged] = term if s is None else s + term
    return PolynomialForm(a.n, a.k + 1, out)


def koszul(a: PolynomialForm, center=None) -> PolynomialForm:
    """Contraction X . a with the radial field X(x) = x - center.

    The resulting space P_{r-1} + X . P_{r-1} does not depend on the
    base point, but a fixed center keeps the arithmetic tidy.
    """
    if a.k == 0:
        raise ZeroFormContraction("cannot contract a 0-form")
    n = a.n
    if center is None:
        center = [0] * n
    xs = [
        Polynomial.variable(n, i) - Polynomial.constant(n, center[i]) for i in range(n)
    ]
    out: dict[tuple, Polynomial] = {}
    for sigma, poly in a.coeffs.items():
        for pos, idx in enumerate(sigma):
            reduced = sigma[:pos] + sigma[pos + 1 :]
            term = (poly * xs[idx]).scale((-1) ** pos)
            s = out.get(reduced)
            out[reduced] = term if s is None else s + term
    return PolynomialForm(n, a.k - 1, out)


def pullback_affine(mat, offset, a: PolynomialForm) -> PolynomialForm:
    """Pullback of `a` under the affine map u -> mat @ u + offset.

    mat has a.n rows and m columns (exact entries); the result lives on
    R^m.  Composite minors give the alternator images, so the formula
    covers embeddings (traces) and degenerate maps alike.
    """
    n = a.n
    m = len(mat[0]) if n else 0
    if a.k > m:
        return PolynomialForm(m, a.k)
    mat = [[_as_fraction(x) for x in row] for row in mat]
    out: dict[tuple, Polynomial] = {}
    for sigma, poly in a.coeffs.items():
        comp = poly.compose_affine(mat, offset)
        if comp.is_zero():
            continue
        for tau in alternators(a.k, m):
            minor = _det([[mat[i][j] for j in tau] for i in sigma])
            if minor == 0:
                continue
            term = comp.scale(minor)
            s = out.get(tau)
            out[tau] = term if s is None else s + term
    return PolynomialForm(m, a.k, out)


def _det(rows) -> Fraction:
    size = len(rows)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j in range(size):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        total += term if j % 2 == 0 else -term
    return total


def inner_product(a: PolynomialForm, b: PolynomialForm) -> Polynomial:
    """Pointwise inner product <a, b> = sum_sigma a_sigma b_sigma."""
    a._check_same_space(b)
    out = Polynomial.zero(a.n)
    for sigma, pa in a.coeffs.items():
        pb = b.coeffs.get(sigma)
        if pb is not None:
            out = out + pa * pb
    return out


def eval_components(a: PolynomialForm, points: np.ndarray) -> np.ndarray:
    """Evaluate all components at float points: shape (P, len(alternators))."""
    points = np.asarray(points, dtype=float).reshape(-1, a.n)
    alts = alternators(a.k, a.n)
    out = np.zeros((points.shape[0], len(alts)))
    for j, sigma in enumerate(alts):
        poly = a.coeffs.get(sigma)
        if poly is not None:
            out[:, j] = poly.eval(points)
    return out


def integrate_over_simplex(a: PolynomialForm, vertices) -> Fraction:
    """Exact integral of a k-form over an oriented k-simplex in R^n.

    `vertices` is a (k+1)-tuple of coordinate points; the orientation is
    the one induced by the given vertex order.
    """
    verts = [[_as_fraction(x) for x in v] for v in vertices]
    k = len(verts) - 1
    if a.k != k:
        raise DimensionMismatch(f"cannot integrate a {a.k}-form over a {k}-simplex")
    if k == 0:
        return a.component(()).eval_exact(verts[0])
    cols = [[verts[j + 1][i] - verts[0][i] for j in range(k)] for i in range(a.n)]
    pulled = pullback_affine(cols, verts[0], a)
    top = pulled.component(tuple(range(k)))
    return top.integral_over_reference_simplex()


def random_form(
    rng: np.random.Generator, n: int, k: int, degree: int, span: int = 3
) -> PolynomialForm:
    """Random polynomial k-form with small integer coefficients."""
    coeffs = {}
    for sigma in alternators(k, n):
        coeffs[sigma] = random_polynomial(rng, n, degree, span)
    return PolynomialForm(n, k, coeffs)


def form_from_arrays(n: int, k: int, exponents, coeff_matrix) -> PolynomialForm:
    """Inverse of `form_to_arrays` (float coefficients become exact)."""
    alts = alternators(k, n)
    coeffs = {}
    for j, sigma in enumerate(alts):
        poly = {}
        for m, mono in enumerate(exponents):
            c = coeff_matrix[j][m]
            if c:
                poly[tuple(mono)] = Fraction(float(c))
        coeffs[sigma] = Polynomial(n, poly)
    return PolynomialForm(n, k, coeffs)


def form_to_arrays(a: PolynomialForm, exponents=None):
    """Float coefficient table (alternators x monomials) for the kernels."""
    if exponents is None:
        degree = max(a.degree(), 0)
        exponents = monomial_basis(a.n, degree)
    index = {tuple(m): i for i, m in enumerate(exponents)}
    alts = alternators(a.k, a.n)
    table = np.zeros((len(alts), len(exponents)))
    for j, sigma in enumerate(alts):
        poly = a.coeffs.get(sigma)
        if poly is None:
            continue
        for mono, c in poly.coeffs.items():
            table[j, index[mono]] = float(c)
    return np.asarray(exponents, dtype=np.int64), table


__all__ = [
    "PolynomialForm",
    "alternators",
    "wedge",
    "exterior_derivative",
    "koszul",
    "pullback_affine",
    "inner_product",
    "eval_components",
    "integrate_over_simplex",
    "random_form",
    "form_to_arrays",
    "form_from_arrays",
    "random_polynomial",
]
