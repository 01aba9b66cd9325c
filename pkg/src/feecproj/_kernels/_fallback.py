"""Numpy implementations of the evaluation kernels.

Points are processed in chunks to keep the broadcast temporaries small.
Semantics match the compiled core bit-for-bit up to floating-point
associativity of the reductions, which both backends perform in the same
order (cells ascending, monomials ascending).
"""

import numpy as np

_CHUNK = 4096


def locate_points(points, lo, hi, origins, inv_mats, tol):
    """Locate each point in a simplicial mesh.

    Parameters are per-cell axis-aligned bounds (lo, hi), the first
    vertex of each cell (origins) and the inverse edge matrices
    (inv_mats), so that lam = inv_mats[c] @ (x - origins[c]) are the
    barycentric coordinates 1..n and lam_0 = 1 - sum(lam).

    Returns (cell_ids, bary) where cell_ids[p] is the lowest cell index
    whose barycentric coordinates are all >= -tol, or -1 if none, and
    bary[p] holds the n+1 barycentric coordinates in that cell.
    """
    points = np.asarray(points, dtype=float)
    P, n = points.shape
    C = origins.shape[0]
    ids = np.full(P, -1, dtype=np.int64)
    bary = np.zeros((P, n + 1), dtype=float)
    for start in range(0, P, _CHUNK):
        pts = points[start : start + _CHUNK]
        inbox = np.all(
            (pts[:, None, :] >= lo[None, :, :] - tol) & (pts[:, None, :] <= hi[None, :, :] + tol),
            axis=2,
        )
        lam = np.einsum("cij,pcj->pci", inv_mats, pts[:, None, :] - origins[None, :, :])
        lam0 = 1.0 - lam.sum(axis=2)
        ok = inbox & (lam.min(axis=2) >= -tol) & (lam0 >= -tol)
        any_ok = ok.any(axis=1)
        first = np.where(any_ok, ok.argmax(axis=1), -1)
        sel = np.nonzero(any_ok)[0]
        ids[start + sel] = first[sel]
        bary[start + sel, 0] = lam0[sel, first[sel]]
        bary[start + sel, 1:] = lam[sel, first[sel], :]
    return ids, bary


def eval_monomials(points, exponents):
    """Monomial value matrix: out[p, m] = prod_i points[p, i] ** exponents[m, i]."""
    points = np.asarray(points, dtype=float)
    exponents = np.asarray(exponents, dtype=np.int64)
    P = points.shape[0]
    M, n = exponents.shape
    out = np.ones((P, M), dtype=float)
    max_exp = int(exponents.max(initial=0))
    powers = np.ones((P, n, max_exp + 1), dtype=float)
    for e in range(1, max_exp + 1):
        powers[:, :, e] = powers[:, :, e - 1] * points
    for i in range(n):
        out *= powers[:, i, exponents[:, i]]
    return out


def eval_forms(points, cell_ids, coeffs, exponents):
    """Evaluate one piecewise polynomial form.

    coeffs has shape (C, A, M): per cell, per alternator component, per
    monomial.  Points with cell_ids < 0 evaluate to zero.
    """
    mono = eval_monomials(points, exponents)
    C, A, M = coeffs.shape
    safe = np.maximum(cell_ids, 0)
    out = np.einsum("pam,pm->pa", coeffs[safe], mono)
    out[cell_ids < 0] = 0.0
    return out


def eval_local_basis(points, cell_ids, coeffs, exponents):
    """Evaluate all local basis forms: out[p, b, a] from coeffs (C, B, A, M)."""
    mono = eval_monomials(points, exponents)
    safe = np.maximum(cell_ids, 0)
    out = np.einsum("pbam,pm->pba", coeffs[safe], mono)
    out[cell_ids < 0] = 0.0
    return out
