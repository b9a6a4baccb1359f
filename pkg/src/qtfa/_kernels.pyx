# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contract as ``qtfa._kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI

cnp.import_array()


cdef double complex[:] _roots(Py_ssize_t L):
    cdef double complex[:] w = np.empty(L, dtype=np.complex128)
    cdef Py_ssize_t k
    for k in range(L):
        w[k] = cos(2.0 * M_PI * k / L) + 1j * sin(2.0 * M_PI * k / L)
    return w


cdef inline Py_ssize_t _mod(Py_ssize_t x, Py_ssize_t L) nogil:
    x = x % L
    return x + L if x < 0 else x


def frame_operator(const double complex[:] g, const double complex[:] h, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t L = g.shape[0]
    cdef Py_ssize_t step = L // b
    cdef double scale = <double>(L // b)
    out = np.zeros((L, L), dtype=np.complex128)
    cdef double complex[:, :] S = out
    cdef Py_ssize_t t, u, m
    cdef double complex acc
    with nogil:
        for t in range(L):
            u = t % step
            while u < L:
                acc = 0
                m = 0
                while m < L:
                    acc = acc + h[_mod(t - m, L)] * g[_mod(u - m, L)].conjugate()
                    m = m + a
                S[t, u] = acc * scale
                u = u + step
    return out


def operator_periodize(const double complex[:, :] S, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t L = S.shape[0]
    cdef Py_ssize_t step = L // b
    cdef double scale = <double>(L // b)
    out = np.zeros((L, L), dtype=np.complex128)
    cdef double complex[:, :] R = out
    cdef Py_ssize_t t, u, m
    cdef double complex acc
    with nogil:
        for t in range(L):
            u = t % step
            while u < L:
                acc = 0
                m = 0
                while m < L:
                    acc = acc + S[_mod(t - m, L), _mod(u - m, L)]
                    m = m + a
                R[t, u] = acc * scale
                u = u + step
    return out


def modulation_periodize(const double complex[:, :] S, Py_ssize_t a, Py_ssize_t b, Py_ssize_t h):
    # the w2 sum depends on (t, u) only through t + u, so it is tabulated per w1
    cdef Py_ssize_t L = S.shape[0]
    cdef double complex[:] w = _roots(L)
    out = np.zeros((L, L), dtype=np.complex128)
    cdef double complex[:, :] R = out
    cdef double complex[:] c = np.empty(L, dtype=np.complex128)
    cdef Py_ssize_t w1, w2, p, q, k, e, t, u, tp, up, tu
    with nogil:
        w1 = 0
        while w1 < L:
            p = _mod(h * w1, L)
            for k in range(L):
                c[k] = 0
            w2 = 0
            while w2 < L:
                q = _mod(h * w2, L)
                # exponent -h^2 w1 w2 + q (k + p), stepped by q along k
                e = _mod(-h * h * w1 * w2 + q * p, L)
                for k in range(L):
                    c[k] = c[k] + w[e]
                    e = e + q
                    if e >= L:
                        e = e - L
                w2 = w2 + b
            for t in range(L):
                tp = _mod(t - p, L)
                for u in range(L):
                    up = u + p
                    if up >= L:
                        up = up - L
                    tu = t + u
                    if tu >= L:
                        tu = tu - L
                    R[t, u] = R[t, u] + c[tu] * S[tp, up]
            w1 = w1 + a
    return out


def twisted_convolution(const double complex[:] x, const double complex[:] y, pts, Py_ssize_t L, int kind, Py_ssize_t h):
    cdef long long[:, :] P = np.ascontiguousarray(pts, dtype=np.int64)
    cdef Py_ssize_t N = P.shape[0]
    ms = np.unique(np.asarray(P[:, 0]))
    ns = np.unique(np.asarray(P[:, 1]))
    cdef Py_ssize_t a = int(ms[1] - ms[0]) if ms.size > 1 else L
    cdef Py_ssize_t b = int(ns[1] - ns[0]) if ns.size > 1 else L
    cdef Py_ssize_t nf = L // b
    cdef double complex[:] w = _roots(L)
    out = np.zeros(N, dtype=np.complex128)
    cdef double complex[:] r = out
    cdef Py_ssize_t i, k, m1, n1, m2, n2, j, e
    cdef double complex acc
    with nogil:
        for i in range(N):
            acc = 0
            for k in range(N):
                m1 = P[k, 0]
                n1 = P[k, 1]
                m2 = _mod(P[i, 0] - m1, L)
                n2 = _mod(P[i, 1] - n1, L)
                j = (m2 // a) * nf + n2 // b
                if kind == 0:
                    e = -m1 * n2
                else:
                    e = h * (m2 * n1 - m1 * n2)
                acc = acc + x[k] * y[j] * w[_mod(e, L)]
            r[i] = acc
    return out
