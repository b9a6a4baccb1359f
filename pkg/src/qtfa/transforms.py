"""Signals on Z_L and functions on the phase-space grid Z_L x Z_L.

Signals are 1-D complex arrays of length L and phase-space functions are
L x L arrays indexed ``[m, n]`` (time shift outer, frequency shift inner).
Inner products are linear in the first slot: ``inner(f, g) = sum f * conj(g)``.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import ModelMismatch
from .phase_space import FiniteLattice, as_point, chirp, root_of_unity, symplectic_character


def as_signal(f, L: int | None = None) -> np.ndarray:
    f = np.asarray(f, dtype=complex)
    if f.ndim != 1:
        raise ModelMismatch(f"signal must be one-dimensional, got shape {f.shape}")
    if L is not None and f.shape[0] != L:
        raise ModelMismatch(f"signal of length {f.shape[0]} used in a model of order {L}")
    return f


def as_phase_function(F, L: int | None = None) -> np.ndarray:
    F = np.asarray(F, dtype=complex)
    if F.ndim != 2 or F.shape[0] != F.shape[1]:
        raise ModelMismatch(f"phase-space function must be square, got shape {F.shape}")
    if L is not None and F.shape[0] != L:
        raise ModelMismatch(f"grid of order {F.shape[0]} used in a model of order {L}")
    return F


def same_order(*arrays) -> int:
    orders = {a.shape[0] for a in arrays}
    if len(orders) != 1:
        raise ModelMismatch(f"mixed model orders {sorted(orders)}")
    return orders.pop()


def inner(f, g) -> complex:
    return complex(np.vdot(g, f))


def delta(k: int, L: int) -> np.ndarray:
    e = np.zeros(L, dtype=complex)
    e[k % L] = 1.0
    return e


def grid_delta(z: Iterable[int], L: int) -> np.ndarray:
    m, n = as_point(z, L)
    F = np.zeros((L, L), dtype=complex)
    F[m, n] = 1.0
    return F


# -- time-frequency shifts and parity ------------------------------------


def tf_shift_matrix(z: Iterable[int], L: int) -> np.ndarray:
    """Matrix of pi(m, n) = M_n T_m: (pi f)[t] = w^{n t} f[t - m]."""
    m, n = as_point(z, L)
    t = np.arange(L)
    U = np.zeros((L, L), dtype=complex)
    U[t, (t - m) % L] = root_of_unity(n * t, L)
    return U


def tf_shift(z: Iterable[int], f) -> np.ndarray:
    f = as_signal(f)
    L = f.shape[0]
    m, n = as_point(z, L)
    return root_of_unity(n * np.arange(L), L) * np.roll(f, m)


def parity(f) -> np.ndarray:
    f = as_signal(f)
    return f[(-np.arange(f.shape[0])) % f.shape[0]]


def parity_matrix(L: int) -> np.ndarray:
    P = np.zeros((L, L), dtype=complex)
    t = np.arange(L)
    P[t, (-t) % L] = 1.0
    return P


# -- short-time Fourier transform and relatives --------------------------


def stft(f, g) -> np.ndarray:
    """V_g f(m, n) = <f, pi(m, n) g>."""
    f, g = as_signal(f), as_signal(g)
    L = same_order(f, g)
    t = np.arange(L)
    shifted = g[(t[None, :] - t[:, None]) % L]  # row m holds g[t - m]
    return np.fft.fft(f[None, :] * shifted.conj(), axis=1)


def ambiguity(f, g) -> np.ndarray:
    """Chirped STFT: A(f, g)(m, n) = w^{h m n} V_g f(m, n), odd L only."""
    V = stft(f, g)
    return chirp(V.shape[0]) * V


def cross_wigner(f, g) -> np.ndarray:
    return symplectic_dft(ambiguity(f, g))


def wigner_by_doubling(f, g, phase_coeff: int = 2, constant: complex = 1.0) -> np.ndarray:
    """W(f, g)(z) = constant * w^{c m n} V_{Pg} f(2z); the cross-check path for cross_wigner."""
    f, g = as_signal(f), as_signal(g)
    L = same_order(f, g)
    chirp(L)  # odd-order guard
    V = stft(f, parity(g))
    idx = (2 * np.arange(L)) % L
    m = np.arange(L)
    return constant * root_of_unity(phase_coeff * np.outer(m, m), L) * V[np.ix_(idx, idx)]


# -- phase-space harmonic analysis ---------------------------------------


def symplectic_dft(F) -> np.ndarray:
    """(F_Omega F)(z) = (1/L) sum_{z'} F(z') exp(-2 pi i Omega(z, z') / L).

    Omega(z, z') = m' n - m n' splits into a forward DFT over m' and an
    inverse DFT over n'; the map is its own inverse.
    """
    F = as_phase_function(F)
    return np.fft.fft(np.fft.ifft(F, axis=1), axis=0).T.copy()


def translate(F, z: Iterable[int]) -> np.ndarray:
    F = as_phase_function(F)
    m, n = as_point(z, F.shape[0])
    return np.roll(F, (m, n), axis=(0, 1))


def symplectic_modulate(F, w: Iterable[int]) -> np.ndarray:
    """M_w F(z) = exp(2 pi i Omega(w, z) / L) F(z).

    This is the order for which symplectic_dft(translate(F, w)) equals
    symplectic_modulate(symplectic_dft(F), w).
    """
    F = as_phase_function(F)
    return symplectic_character(w, F.shape[0]).conj() * F


def reflect(F) -> np.ndarray:
    F = as_phase_function(F)
    idx = (-np.arange(F.shape[0])) % F.shape[0]
    return F[np.ix_(idx, idx)]


def grid_convolve(F, G) -> np.ndarray:
    """Cyclic convolution (F * G)(z) = sum_w F(w) G(z - w) on Z_L x Z_L."""
    F, G = as_phase_function(F), as_phase_function(G)
    same_order(F, G)
    return np.fft.ifft2(np.fft.fft2(F) * np.fft.fft2(G))


def periodize(F, lat: FiniteLattice) -> np.ndarray:
    """(P_Lambda F)(z) = sum over lambda of F(z - lambda)."""
    F = as_phase_function(F, lat.L)
    out = np.zeros_like(F)
    for m, n in lat.points:
        out += np.roll(F, (m, n), axis=(0, 1))
    return out


def poisson_series(F, lat: FiniteLattice) -> np.ndarray:
    """Right-hand side of symplectic Poisson summation on the whole grid.

    (1/s) sum over the adjoint lattice of F_Omega(F)(l) exp(2 pi i Omega(l, z) / L),
    which equals ``periodize(F, lat)``.
    """
    F = as_phase_function(F, lat.L)
    L = lat.L
    FO = symplectic_dft(F)
    out = np.zeros_like(F)
    for lo in lat.adjoint().points:
        # exp(2 pi i Omega(lo, z)/L) as a function of z is conj of the character at lo
        out += FO[lo] * symplectic_character(lo, L).conj()
    return out * (lat.L / (lat.a * lat.b))


def moyal_pair(f1, g1, f2, g2) -> tuple[complex, complex]:
    """(sum V_{g1}f1 conj V_{g2}f2, <f1,f2> conj<g1,g2>) for checking orthogonality relations."""
    lhs = np.vdot(stft(f2, g2), stft(f1, g1))
    return complex(lhs), inner(f1, f2) * np.conj(inner(g1, g2))


def reconstruct(V, g, h) -> np.ndarray:
    """Invert an STFT with analysis window g using synthesis window h.

    f = (1 / (L <h, g>)) sum_z V_g f(z) pi(z) h.
    """
    V = as_phase_function(V)
    h = as_signal(h, V.shape[0])
    L = V.shape[0]
    t = np.arange(L)
    # sum_n V[m, n] w^{n t} = L * ifft(V[m])[t]
    series = L * np.fft.ifft(V, axis=1)  # [m, t]
    shifted = h[(t[None, :] - t[:, None]) % L]  # [m, t] = h[t - m]
    out = (series * shifted).sum(axis=0)
    return out / (L * inner(h, g))


def lp_norm(F, p: float = 2) -> float:
    F = np.asarray(F)
    if np.isinf(p):
        return float(np.abs(F).max(initial=0.0))
    return float((np.abs(F) ** p).sum() ** (1.0 / p))
