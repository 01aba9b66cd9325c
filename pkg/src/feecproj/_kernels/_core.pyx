#cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled evaluation kernels; see _fallback.py for the array contract."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def locate_points(points, lo, hi, origins, inv_mats, double tol):
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] blo = np.ascontiguousarray(lo, dtype=np.float64)
    cdef double[:, ::1] bhi = np.ascontiguousarray(hi, dtype=np.float64)
    cdef double[:, ::1] org = np.ascontiguousarray(origins, dtype=np.float64)
    cdef double[:, :, ::1] inv = np.ascontiguousarray(inv_mats, dtype=np.float64)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1], C = org.shape[0]
    ids_arr = np.full(P, -1, dtype=np.int64)
    bary_arr = np.zeros((P, n + 1), dtype=np.float64)
    cdef long long[::1] ids = ids_arr
    cdef double[:, ::1] bary = bary_arr
    cdef Py_ssize_t p, c, i, j
    cdef double lam0, v
    cdef double lam[8]
    cdef bint ok
    for p in range(P):
        for c in range(C):
            ok = True
            for i in range(n):
                v = pts[p, i]
                if v < blo[c, i] - tol or v > bhi[c, i] + tol:
                    ok = False
                    break
            if not ok:
                continue
            lam0 = 1.0
            for i in range(n):
                v = 0.0
                for j in range(n):
                    v += inv[c, i, j] * (pts[p, j] - org[c, j])
                if v < -tol:
                    ok = False
                    break
                lam[i] = v
                lam0 -= v
            if not ok or lam0 < -tol:
                continue
            ids[p] = c
            bary[p, 0] = lam0
            for i in range(n):
                bary[p, i + 1] = lam[i]
            break
    return ids_arr, bary_arr


def eval_monomials(points, exponents):
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef long long[:, ::1] expo = np.ascontiguousarray(exponents, dtype=np.int64)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1], M = expo.shape[0]
    out_arr = np.ones((P, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t p, m, i, e
    cdef double acc
    for p in range(P):
        for m in range(M):
            acc = 1.0
            for i in range(n):
                for e in range(expo[m, i]):
                    acc *= pts[p, i]
            out[p, m] = acc
    return out_arr


def eval_forms(points, cell_ids, coeffs, exponents):
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef long long[::1] ids = np.ascontiguousarray(cell_ids, dtype=np.int64)
    cdef double[:, :, ::1] cf = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef long long[:, ::1] expo = np.ascontiguousarray(exponents, dtype=np.int64)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1]
    cdef Py_ssize_t A = cf.shape[1], M = cf.shape[2]
    out_arr = np.zeros((P, A), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double mono[256]
    cdef Py_ssize_t p, a, m, i, e
    cdef long long c
    cdef double acc
    if M > 256:
        raise ValueError("monomial table too large for compiled kernel")
    for p in range(P):
        c = ids[p]
        if c < 0:
            continue
        for m in range(M):
            acc = 1.0
            for i in range(n):
                for e in range(expo[m, i]):
                    acc *= pts[p, i]
            mono[m] = acc
        for a in range(A):
            acc = 0.0
            for m in range(M):
                acc += cf[c, a, m] * mono[m]
            out[p, a] = acc
    return out_arr


def eval_local_basis(points, cell_ids, coeffs, exponents):
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef long long[::1] ids = np.ascontiguousarray(cell_ids, dtype=np.int64)
    cdef double[:, :, :, ::1] cf = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef long long[:, ::1] expo = np.ascontiguousarray(exponents, dtype=np.int64)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1]
    cdef Py_ssize_t B = cf.shape[1], A = cf.shape[2], M = cf.shape[3]
    out_arr = np.zeros((P, B, A), dtype=np.float64)
    cdef double[:, :, ::1] out = out_arr
    cdef double mono[256]
    cdef Py_ssize_t p, b, a, m, i, e
    cdef long long c
    cdef double acc
    if M > 256:
        raise ValueError("monomial table too large for compiled kernel")
    for p in range(P):
        c = ids[p]
        if c < 0:
            continue
        for m in range(M):
            acc = 1.0
            for i in range(n):
                for e in range(expo[m, i]):
                    acc *= pts[p, i]
            mono[m] = acc
        for b in range(B):
            for a in range(A):
                acc = 0.0
                for m in range(M):
                    acc += cf[c, b, a, m] * mono[m]
                out[p, b, a] = acc
    return out_arr
