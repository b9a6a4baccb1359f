"""Numpy implementations of the hot kernels.

Signatures mirror ``_kernels.pyx`` exactly; ``qtfa._backend`` picks one.
All inputs are contiguous complex128 arrays and ints.
"""

import numpy as np


def _roots(L):
    return np.exp(2j * np.pi * np.arange(L) / L)


def frame_operator(g, h, a, b):
    """sum over (m, n) in aZ_L x bZ_L of pi(m, n)h (pi(m, n)g)^H (Walnut form).

    The frequency sum collapses to (L/b) on the band t - u in (L/b)Z_L.
    """
    L = g.shape[0]
    shifts = np.arange(0, L, a)
    t = np.arange(L)
    # H[k, t] = h[t - m_k], G[k, u] = g[u - m_k]
    H = h[(t[None, :] - shifts[:, None]) % L]
    G = g[(t[None, :] - shifts[:, None]) % L]
    S = H.T @ G.conj()
    band = ((t[:, None] - t[None, :]) % (L // b)) == 0
    return np.where(band, S * (L // b), 0.0).astype(complex)


def operator_periodize(S, a, b):
    """sum over lambda in aZ_L x bZ_L of pi(lambda) S pi(lambda)^*."""
    L = S.shape[0]
    acc = np.zeros((L, L), dtype=complex)
    for m in range(0, L, a):
        acc += np.roll(S, (m, m), axis=(0, 1))
    t = np.arange(L)
    band = ((t[:, None] - t[None, :]) % (L // b)) == 0
    return np.where(band, acc * (L // b), 0.0)


def modulation_periodize(S, a, b, h):
    """sum over w in aZ_L x bZ_L of phi(w) pi(hw) S pi(hw), phi(w) = w^{-h^2 w1 w2}.

    Entry formula: (pi(p,q) S pi(p,q))[t, u] = w^{q (t + u + p)} S[t - p, u + p].
    The w2 sum depends on (t, u) only through t + u and is tabulated per w1.
    """
    L = S.shape[0]
    w = _roots(L)
    t = np.arange(L)
    tu = (t[:, None] + t[None, :]) % L
    w2 = np.arange(0, L, b)
    q = (h * w2) % L
    acc = np.zeros((L, L), dtype=complex)
    for w1 in range(0, L, a):
        p = (h * w1) % L
        ph = w[(-h * h * w1 * w2) % L]
        c = (ph[None, :] * w[(q[None, :] * ((t[:, None] + p) % L)) % L]).sum(axis=1)
        acc += c[tu] * S[np.ix_((t - p) % L, (t + p) % L)]
    return acc


def twisted_convolution(x, y, pts, L, kind, h):
    """(x # y)(lam) = sum_mu x(mu) y(lam - mu) c(mu, lam - mu) over lattice points.

    ``pts`` is an (N, 2) int array of the lattice in row-major order with
    spacings (pts generate aZ_L x bZ_L); ``kind`` is 0 for the Heisenberg
    cocycle w^{-m1 n2} and 1 for the symmetric w^{h (m2 n1 - m1 n2)}.
    """
    pts = np.asarray(pts, dtype=np.int64)
    N = pts.shape[0]
    ms = np.unique(pts[:, 0])
    ns = np.unique(pts[:, 1])
    a = int(ms[1] - ms[0]) if ms.size > 1 else L
    b = int(ns[1] - ns[0]) if ns.size > 1 else L
    nf = L // b
    w = _roots(L)
    lam = pts[:, None, :]
    mu = pts[None, :, :]
    diff = (lam - mu) % L
    j = (diff[..., 0] // a) * nf + diff[..., 1] // b
    m1, n1 = mu[..., 0], mu[..., 1]
    m2, n2 = diff[..., 0], diff[..., 1]
    if kind == 0:
        e = -m1 * n2
    else:
        e = h * (m2 * n1 - m1 * n2)
    c = w[e % L]
    return (x[None, :] * y[j] * c).sum(axis=1).reshape(N)
