"""Reference implementations written as plain loops over the definitions.

Nothing here uses FFTs or the kernel modules; the fast paths are tested
against these.
"""

from __future__ import annotations

import cmath

import numpy as np


def _w(e: int, L: int) -> complex:
    e %= L
    return 1.0 if e == 0 else cmath.exp(2j * cmath.pi * e / L)


def naive_tf_shift(m: int, n: int, L: int) -> np.ndarray:
    U = np.zeros((L, L), dtype=complex)
    for t in range(L):
        U[t, (t - m) % L] = _w(n * t, L)
    return U


def naive_stft(f, g) -> np.ndarray:
    L = len(f)
    V = np.zeros((L, L), dtype=complex)
    for m in range(L):
        for n in range(L):
            acc = 0j
            for t in range(L):
                acc += f[t] * np.conj(_w(n * t, L) * g[(t - m) % L])
            V[m, n] = acc
    return V


def naive_spreading(S) -> np.ndarray:
    """eta(m, n) = (1/L) sum_t conj(pi(m,n)[t, t-m]) S[t, t-m]."""
    S = np.asarray(S, dtype=complex)
    L = S.shape[0]
    eta = np.zeros((L, L), dtype=complex)
    for m in range(L):
        for n in range(L):
            acc = 0j
            for t in range(L):
                for u in range(L):
                    if (t - u) % L == m:
                        acc += np.conj(_w(n * t, L)) * S[t, u]
            eta[m, n] = acc / L
    return eta


def naive_frame_operator(g, h, L: int, a: int, b: int) -> np.ndarray:
    """sum over lambda of pi(lambda) h (pi(lambda) g)^H, one rank-one term at a time."""
    g, h = np.asarray(g, dtype=complex), np.asarray(h, dtype=complex)
    S = np.zeros((L, L), dtype=complex)
    for m in range(0, L, a):
        for n in range(0, L, b):
            pg = np.array([_w(n * t, L) * g[(t - m) % L] for t in range(L)])
            ph = np.array([_w(n * t, L) * h[(t - m) % L] for t in range(L)])
            for t in range(L):
                for u in range(L):
                    S[t, u] += ph[t] * np.conj(pg[u])
    return S


def naive_symplectic_dft(F) -> np.ndarray:
    F = np.asarray(F, dtype=complex)
    L = F.shape[0]
    out = np.zeros((L, L), dtype=complex)
    for m in range(L):
        for n in range(L):
            acc = 0j
            for mp in range(L):
                for np_ in range(L):
                    acc += F[mp, np_] * _w(-(mp * n - m * np_), L)
            out[m, n] = acc / L
    return out


def naive_operator_periodize(S, L: int, a: int, b: int) -> np.ndarray:
    S = np.asarray(S, dtype=complex)
    out = np.zeros((L, L), dtype=complex)
    for m in range(0, L, a):
        for n in range(0, L, b):
            U = naive_tf_shift(m, n, L)
            out += U @ S @ U.conj().T
    return out


def naive_modulation_periodize(S, L: int, a: int, b: int) -> np.ndarray:
    """sum over lambda of w^{-h^2 l1 l2} pi(h l) S pi(h l), odd L."""
    h = (L + 1) // 2
    S = np.asarray(S, dtype=complex)
    out = np.zeros((L, L), dtype=complex)
    for m in range(0, L, a):
        for n in range(0, L, b):
            U = naive_tf_shift(h * m, h * n, L)
            out += _w(-h * h * m * n, L) * (U @ S @ U)
    return out


def naive_twisted_convolution(x, y, points, L: int, kind: int) -> np.ndarray:
    h = (L + 1) // 2
    index = {tuple(p): i for i, p in enumerate(points)}
    out = np.zeros(len(points), dtype=complex)
    for i, (lm, ln) in enumerate(points):
        for k, (m1, n1) in enumerate(points):
            m2, n2 = (lm - m1) % L, (ln - n1) % L
            c = _w(-m1 * n2, L) if kind == 0 else _w(h * (m2 * n1 - m1 * n2), L)
            out[i] += x[k] * y[index[(m2, n2)]] * c
    return out
