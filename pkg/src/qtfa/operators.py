"""Operators on C^L: spreading functions, Weyl symbols, operator translations
and modulations, and operator convolutions.

Operators are dense complex L x L matrices. Phase-space functions follow the
``[m, n]`` layout of :mod:`qtfa.transforms`.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .constants import kappa
from .errors import ModelMismatch
from .phase_space import as_point, chirp, require_odd, root_of_unity
from .transforms import (
    as_phase_function,
    grid_convolve,
    parity_matrix,
    reflect,
    symplectic_dft,
    tf_shift_matrix,
)


def as_operator(S, L: int | None = None) -> np.ndarray:
    S = np.asarray(S, dtype=complex)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ModelMismatch(f"operator must be a square matrix, got shape {S.shape}")
    if L is not None and S.shape[0] != L:
        raise ModelMismatch(f"operator of order {S.shape[0]} used in a model of order {L}")
    return S


def rank_one(u, v) -> np.ndarray:
    """(u (x) v) w = <w, v> u."""
    return np.outer(np.asarray(u, dtype=complex), np.conj(np.asarray(v, dtype=complex)))


# -- norms -----------------------------------------------------------------


def op_norm(S) -> float:
    return float(np.linalg.norm(as_operator(S), 2))


def hs_norm(S) -> float:
    return float(np.linalg.norm(as_operator(S), "fro"))


def trace_norm(S) -> float:
    return float(np.linalg.norm(as_operator(S), "nuc"))


def feichtinger_atom(L: int) -> np.ndarray:
    """Periodised Gaussian scaled so that sum |V_phi phi| over Z_L x Z_L is 1."""
    from .transforms import stft

    t = np.arange(L)
    k = np.arange(-3, 4)
    x = (t[:, None] + L * k[None, :]) / np.sqrt(L)
    phi = np.exp(-np.pi * x**2).sum(axis=1).astype(complex)
    return phi / np.sqrt(np.abs(stft(phi, phi)).sum())


def mod_space_norm(S, atom=None) -> float:
    """Finite analogue of the operator norm from M^1 into M^infinity.

    With M^1 normed atomically by the time-frequency shifts of
    ``feichtinger_atom``, the norm is the largest entry of the Gabor matrix
    |<S pi(w') phi, pi(w) phi>| over all pairs of phase-space points.
    """
    S = as_operator(S)
    L = S.shape[0]
    phi = feichtinger_atom(L) if atom is None else np.asarray(atom, dtype=complex)
    t = np.arange(L)
    shifted = phi[(t[None, :] - t[:, None]) % L]  # [m, t]
    mod = root_of_unity(np.outer(np.arange(L), t), L)  # [n, t]
    atoms = (shifted[:, None, :] * mod[None, :, :]).reshape(L * L, L).T
    gabor = atoms.conj().T @ S @ atoms
    return float(np.abs(gabor).max())


# -- spreading, Fourier-Wigner, Weyl ----------------------------------------


def spreading(S) -> np.ndarray:
    """eta_S(z) = (1/L) tr(pi(z)^* S), so that S = sum_z eta_S(z) pi(z).

    tr(pi(m, n)^* S) = sum_t w^{-n t} S[t, t - m] is a DFT of the m-th diagonal.
    """
    S = as_operator(S)
    L = S.shape[0]
    t = np.arange(L)
    diagonals = S[t[None, :], (t[None, :] - t[:, None]) % L]  # [m, t]
    return np.fft.fft(diagonals, axis=1) / L


def spreading_synthesis(eta) -> np.ndarray:
    eta = as_phase_function(eta)
    L = eta.shape[0]
    t = np.arange(L)
    diagonals = L * np.fft.ifft(eta, axis=1)  # [m, t] = sum_n eta[m, n] w^{n t}
    S = np.zeros((L, L), dtype=complex)
    rows = np.broadcast_to(t[None, :], (L, L))
    cols = (t[None, :] - t[:, None]) % L
    S[rows, cols] = diagonals
    return S


def fourier_wigner(S) -> np.ndarray:
    """F_W(S) = Ph * eta_S with the chirp Ph(m, n) = w^{h m n} (odd L)."""
    eta = spreading(S)
    return chirp(eta.shape[0]) * eta


def inverse_fourier_wigner(F) -> np.ndarray:
    F = as_phase_function(F)
    return spreading_synthesis(np.conj(chirp(F.shape[0])) * F)


def weyl_symbol(S) -> np.ndarray:
    return symplectic_dft(fourier_wigner(S))


def weyl_quantize(sigma) -> np.ndarray:
    sigma = as_phase_function(sigma)
    return inverse_fourier_wigner(symplectic_dft(sigma))


def weyl_pairing(S, f, g) -> complex:
    """(kappa_sigma / L) sum_z sigma_S(z) conj(W(g, f)(z)); equals <S f, g>."""
    from .transforms import cross_wigner

    S = as_operator(S)
    L = S.shape[0]
    W = cross_wigner(g, f)
    return complex(kappa("weak_pairing", L) / L * np.sum(weyl_symbol(S) * W.conj()))


# -- operator translations, modulations, reflection -------------------------


def translate_op(z: Iterable[int], S) -> np.ndarray:
    """alpha_z(S) = pi(z) S pi(z)^*; entrywise w^{n (t - u)} S[t - m, u - m]."""
    S = as_operator(S)
    L = S.shape[0]
    m, n = as_point(z, L)
    t = np.arange(L)
    return root_of_unity(n * np.subtract.outer(t, t), L) * np.roll(S, (m, m), axis=(0, 1))


def modulation_phase(w: Iterable[int], L: int) -> complex:
    """phi(w) in beta_w(S) = phi(w) pi(hw) S pi(hw)."""
    w1, w2 = as_point(w, L)
    return root_of_unity(kappa("modulation_phase", L) * w1 * w2, L)


def modulate_op(w: Iterable[int], S) -> np.ndarray:
    S = as_operator(S)
    L = S.shape[0]
    h = require_odd(L, "operator modulation")
    w1, w2 = as_point(w, L)
    U = tf_shift_matrix((h * w1, h * w2), L)
    return modulation_phase((w1, w2), L) * (U @ S @ U)


def reflect_op(S) -> np.ndarray:
    """Check S = P S P."""
    S = as_operator(S)
    idx = (-np.arange(S.shape[0])) % S.shape[0]
    return S[np.ix_(idx, idx)]


def parity_translate(z: Iterable[int], L: int) -> np.ndarray:
    """alpha_z(P), computed by conjugation."""
    return translate_op(z, parity_matrix(L))


def weyl_quantize_via_parity(sigma) -> np.ndarray:
    """kappa_P * sum_z sigma(z) alpha_z(P)."""
    sigma = as_phase_function(sigma)
    L = sigma.shape[0]
    require_odd(L, "Weyl quantisation")
    P = parity_matrix(L)
    out = np.zeros((L, L), dtype=complex)
    for m, n in zip(*np.nonzero(sigma)):
        out += sigma[m, n] * translate_op((m, n), P)
    return kappa("weyl_parity", L) * out


# -- operator convolutions ---------------------------------------------------


def conv_op_op(S, T) -> np.ndarray:
    """(S * T)(z) = tr(S alpha_z(check T)) on the whole grid.

    For each time shift m the trace sums S[u, t] X[t - m, u - m] w^{n (t - u)};
    grouping by t - u turns the n-dependence into an inverse DFT.
    """
    S, T = as_operator(S), as_operator(T)
    L = S.shape[0]
    X = reflect_op(T)
    t = np.arange(L)
    d = np.subtract.outer(t, t) % L
    out = np.empty((L, L), dtype=complex)
    for m in range(L):
        Y = S.T * np.roll(X, (m, m), axis=(0, 1))
        c = np.bincount(d.ravel(), weights=Y.real.ravel(), minlength=L) + 1j * np.bincount(
            d.ravel(), weights=Y.imag.ravel(), minlength=L
        )
        out[m] = L * np.fft.ifft(c)
    return out


def conv_fn_op(f, S) -> np.ndarray:
    """f * S = sum_z f(z) alpha_z(S)."""
    f = as_phase_function(f)
    S = as_operator(S, f.shape[0])
    L = S.shape[0]
    t = np.arange(L)
    d = np.subtract.outer(t, t) % L
    series = L * np.fft.ifft(f, axis=1)  # [m, k] = sum_n f[m, n] w^{n k}
    out = np.zeros((L, L), dtype=complex)
    for m in range(L):
        if np.any(f[m]):
            out += series[m][d] * np.roll(S, (m, m), axis=(0, 1))
    return out


def symbol_convolution(S, T) -> np.ndarray:
    """kappa_c (sigma_S * sigma_T), the symbol-side route to conv_op_op."""
    L = as_operator(S).shape[0]
    return kappa("op_convolution", L) * grid_convolve(weyl_symbol(S), weyl_symbol(T))


def reflected_symbol(S) -> np.ndarray:
    """Weyl symbol of check S, which is the reflected symbol of S."""
    return reflect(weyl_symbol(S))
