"""Lambda-translation and Lambda-modulation invariant operators.

Translation invariance means alpha_lambda(T) = T for every lattice point,
modulation invariance means beta_lambda(T) = T.  The first class is spanned
by time-frequency shifts from the adjoint lattice, the second by parity
operators translated to adjoint-lattice points.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from ._backend import kernels
from .constants import kappa
from .errors import (
    LatticeConditionViolated,
    LatticeMismatch,
    NotInvariant,
    SupportLeak,
    SupportViolation,
    ZeroSymbolAtOrigin,
)
from .gabor import CoefficientSequence, frame_operator
from .operators import (
    as_operator,
    conv_op_op,
    fourier_wigner,
    modulate_op,
    op_norm,
    parity_translate,
    reflect_op,
    spreading,
    translate_op,
    weyl_symbol,
)
from .phase_space import FiniteLattice, coefficient_twist, half_lattice, require_odd
from .transforms import delta, grid_convolve, tf_shift_matrix

InvarianceKind = Literal["translation", "modulation"]

DEFAULT_REL_TOL = 1e-9
ABS_FLOOR = 1e-12


@dataclass
class InvarianceReport:
    kind: str
    lattice: FiniteLattice
    max_defect: float
    is_invariant: bool
    tol: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lattice"] = self.lattice.as_triple()
        return d


def effective_tol(T, rel_tol: float = DEFAULT_REL_TOL) -> float:
    return max(rel_tol * op_norm(T), ABS_FLOOR)


def invariance_defect(
    T, lat: FiniteLattice, kind: InvarianceKind = "translation", rel_tol: float = DEFAULT_REL_TOL
) -> InvarianceReport:
    """Largest ||gamma_g(T) - T||_op over the two lattice generators.

    Checking generators is enough because alpha and beta are group actions
    of the lattice.
    """
    T = as_operator(T, lat.L)
    if kind == "translation":
        act = translate_op
    elif kind == "modulation":
        require_odd(lat.L, "modulation invariance")
        act = modulate_op
    else:
        raise ValueError(f"unknown invariance kind {kind!r}")
    defect = max(op_norm(act(gen, T) - T) for gen in lat.generators())
    tol = effective_tol(T, rel_tol)
    return InvarianceReport(kind, lat, float(defect), bool(defect <= tol), tol)


def require_invariant(T, lat: FiniteLattice, kind: InvarianceKind, rel_tol=DEFAULT_REL_TOL):
    rep = invariance_defect(T, lat, kind, rel_tol)
    if not rep.is_invariant:
        raise NotInvariant(
            f"operator is not {lat}-{kind} invariant (defect {rep.max_defect:.3e} > {rep.tol:.3e})"
        )
    return rep


def _adjoint_values(F: np.ndarray, lat: FiniteLattice) -> np.ndarray:
    pts = lat.adjoint().point_array
    return F[pts[:, 0], pts[:, 1]]


def _off_adjoint_mass(F: np.ndarray, lat: FiniteLattice) -> float:
    return float(np.abs(np.where(lat.adjoint().mask(), 0.0, F)).max(initial=0.0))


# -- translation invariant operators ---------------------------------------


def synthesize_translation_invariant(k: CoefficientSequence, lat: FiniteLattice) -> np.ndarray:
    """T = (1/s) sum over the adjoint lattice of k(l) e^{-pi i l1 l2} pi(l)."""
    adj = lat.adjoint()
    if k.lattice != adj:
        raise LatticeMismatch(f"coefficients live on {k.lattice}, expected {adj}")
    twist = coefficient_twist(adj)
    L = lat.L
    T = np.zeros((L, L), dtype=complex)
    for z, v, t in zip(adj.points, k.values, twist):
        if v != 0:
            T += v * t * tf_shift_matrix(z, L)
    return T / float(lat.covolume())


def analyze_translation_invariant(
    T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL
) -> CoefficientSequence:
    """Operator Fourier coefficients k(l) = s e^{pi i l1 l2} eta_T(l)."""
    rep = require_invariant(T, lat, "translation", rel_tol)
    eta = spreading(T)
    leak = _off_adjoint_mass(eta, lat)
    if leak > rep.tol:
        raise SupportLeak(f"spreading function has mass {leak:.3e} off the adjoint lattice")
    adj = lat.adjoint()
    vals = float(lat.covolume()) * np.conj(coefficient_twist(adj)) * _adjoint_values(eta, lat)
    return CoefficientSequence(adj, vals, dual_of=lat)


def operator_periodize(S, lat: FiniteLattice) -> np.ndarray:
    """sum over lambda of alpha_lambda(S)."""
    S = as_operator(S, lat.L)
    return kernels.operator_periodize(np.ascontiguousarray(S), lat.a, lat.b)


def translation_bound(k: CoefficientSequence, lat: FiniteLattice) -> float:
    """||k||_inf / s, the bound on the M-infinity norm of the synthesised operator."""
    return k.norm(np.inf) / float(lat.covolume())


def truncation_demo(k: CoefficientSequence, lat: FiniteLattice) -> list[tuple[int, float, float]]:
    """Synthesise from growing truncations of k (largest entries first).

    Returns (terms kept, ||T - T_n||_op, l^2 tail bound) per step; the error
    reaches zero once every nonzero coefficient is kept.
    """
    T = synthesize_translation_invariant(k, lat)
    order = np.argsort(-np.abs(k.values), kind="stable")
    rows = []
    for n in range(len(order) + 1):
        vals = np.zeros_like(k.values)
        vals[order[:n]] = k.values[order[:n]]
        kn = k.like(vals)
        err = op_norm(T - synthesize_translation_invariant(kn, lat))
        tail = k.like(k.values - vals).norm(1) / float(lat.covolume())
        rows.append((n, err, tail))
    return rows


# -- modulation invariant operators ----------------------------------------


def fourier_wigner_periodize(S, lat: FiniteLattice) -> np.ndarray:
    """sum over lambda of beta_lambda(S)."""
    S = as_operator(S, lat.L)
    h = require_odd(lat.L, "Fourier-Wigner periodisation")
    return kernels.modulation_periodize(np.ascontiguousarray(S), lat.a, lat.b, h)


def trig_samples(T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL) -> CoefficientSequence:
    """Weyl symbol samples sigma_T(l) on the adjoint lattice.

    F_W(T)(z) = kappa sum sigma_T(l) e^{2 pi i Omega(l, z)/L}; the symbol must
    vanish off the adjoint lattice.
    """
    rep = require_invariant(T, lat, "modulation", rel_tol)
    sigma = weyl_symbol(T)
    leak = _off_adjoint_mass(sigma, lat)
    if leak > rep.tol:
        raise SupportLeak(f"Weyl symbol has mass {leak:.3e} off the adjoint lattice")
    return CoefficientSequence(lat.adjoint(), _adjoint_values(sigma, lat), dual_of=lat)


def trig_series(samples: CoefficientSequence, lat: FiniteLattice) -> np.ndarray:
    """F_W of the operator with these symbol samples, summed as a trigonometric series."""
    L = lat.L
    m = np.arange(L)
    out = np.zeros((L, L), dtype=complex)
    for (p, q), v in zip(samples.lattice.points, samples.values):
        if v != 0:
            # Omega((p, q), (m, n)) = m q - p n
            out += v * np.exp(2j * np.pi * ((q * m)[:, None] - (p * m)[None, :]) / L)
    return float(kappa("trig_series", L)) * out


def synthesize_modulation_invariant(samples: CoefficientSequence, lat: FiniteLattice) -> np.ndarray:
    """kappa_P sum over the adjoint lattice of s(l) alpha_l(P)."""
    L = lat.L
    require_odd(L, "modulation-invariant synthesis")
    T = np.zeros((L, L), dtype=complex)
    for z, v in zip(samples.lattice.points, samples.values):
        if v != 0:
            T += v * parity_translate(z, L)
    return kappa("weyl_parity", L) * T


def modulation_janssen(S, lat: FiniteLattice) -> np.ndarray:
    """(kappa_J / s) sum over the adjoint lattice of sigma_S(l) alpha_l(P)."""
    S = as_operator(S, lat.L)
    require_odd(lat.L, "modulation Janssen representation")
    sigma = weyl_symbol(S)
    seq = CoefficientSequence(lat.adjoint(), _adjoint_values(sigma, lat), dual_of=lat)
    scale = kappa("modulation_janssen", lat.L) / float(lat.covolume())
    return scale * synthesize_modulation_invariant(seq, lat) / kappa("weyl_parity", lat.L)


def modulation_bound(T, lat: FiniteLattice) -> float:
    """sum |sigma_T(l)|, an upper bound for ||T||_op since ||alpha_l(P)|| = 1."""
    return float(np.abs(trig_samples(T, lat).values).sum()) * abs(kappa("weyl_parity", lat.L))


def sampled_convolution_reconstruct(T, S, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL):
    """Recover a modulation-invariant T from samples of T * S on the adjoint lattice.

    Needs sigma_S(0) != 0 and sigma_S = 0 at every other adjoint-lattice point;
    then (T * S)(l) = kappa_c sigma_T(l) sigma_S(0).
    """
    T, S = as_operator(T, lat.L), as_operator(S, lat.L)
    require_invariant(T, lat, "modulation", rel_tol)
    sigma_S = weyl_symbol(S)
    scale = max(np.abs(sigma_S).max(), ABS_FLOOR)
    s0 = sigma_S[0, 0]
    if abs(s0) <= rel_tol * scale:
        raise ZeroSymbolAtOrigin("sigma_S(0) vanishes; the samples carry no information")
    on_adj = np.abs(_adjoint_values(sigma_S, lat))
    if on_adj[1:].max(initial=0.0) > rel_tol * scale:
        raise SupportViolation("sigma_S reaches another adjoint-lattice point")
    conv = conv_op_op(T, S)
    vals = _adjoint_values(conv, lat) / (kappa("op_convolution", lat.L) * s0)
    return synthesize_modulation_invariant(
        CoefficientSequence(lat.adjoint(), vals, dual_of=lat), lat
    )


# -- composition calculus ---------------------------------------------------


def require_calculus_lattice(lat: FiniteLattice) -> None:
    require_odd(lat.L, "spreading function calculus")
    if (2 * lat.L) % (lat.a * lat.b):
        raise LatticeConditionViolated(
            f"ab = {lat.a * lat.b} does not divide 2L = {2 * lat.L}"
        )


@dataclass
class CalculusResult:
    lhs: np.ndarray
    rhs: np.ndarray
    residual: float
    commutation_residual: float
    weyl_residual: float


def spreading_calculus(S, T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL) -> CalculusResult:
    """F_W(ST)(2z) against kappa (sigma_S conv sigma_{T-check})(z)."""
    require_calculus_lattice(lat)
    S, T = as_operator(S, lat.L), as_operator(T, lat.L)
    require_invariant(S, lat, "modulation", rel_tol)
    require_invariant(T, lat, "modulation", rel_tol)
    L = lat.L
    h = (L + 1) // 2
    ST = S @ T
    Tc = reflect_op(T)
    idx2 = (2 * np.arange(L)) % L
    lhs = fourier_wigner(ST)[np.ix_(idx2, idx2)]
    rhs = kappa("calculus", L) * grid_convolve(weyl_symbol(S), weyl_symbol(Tc))
    comm = op_norm(S @ Tc - T @ reflect_op(S))
    idxh = (h * np.arange(L)) % L
    w_lhs = weyl_symbol(ST)[np.ix_(idxh, idxh)]
    w_rhs = kappa("weyl_symbol_calculus", L) * fourier_wigner(S) * fourier_wigner(Tc)
    return CalculusResult(
        lhs=lhs,
        rhs=rhs,
        residual=float(np.abs(lhs - rhs).max()),
        commutation_residual=float(comm),
        weyl_residual=float(np.abs(w_lhs - w_rhs).max()),
    )


def composition_translation_check(
    S, T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL
) -> InvarianceReport:
    """ST is invariant under translations by the half lattice."""
    require_odd(lat.L, "composition identity")
    require_invariant(S, lat, "modulation", rel_tol)
    require_invariant(T, lat, "modulation", rel_tol)
    return invariance_defect(as_operator(S) @ as_operator(T), half_lattice(lat), "translation", rel_tol)


def theta(S) -> np.ndarray:
    """Theta(S) = S P."""
    S = as_operator(S)
    L = S.shape[0]
    return S[:, (-np.arange(L)) % L]


def theta_symbol_residual(S) -> float:
    """max |F_W(Theta S)(2z) - kappa_Theta sigma_S(z)|."""
    S = as_operator(S)
    L = S.shape[0]
    require_odd(L, "Theta symbol relation")
    idx2 = (2 * np.arange(L)) % L
    lhs = fourier_wigner(theta(S))[np.ix_(idx2, idx2)]
    return float(np.abs(lhs - kappa("theta", L) * weyl_symbol(S)).max())


def symbol_calculus_check(S, T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """max |kappa sigma_S sigma_T - sigma_{ST}| for translation invariant S, T."""
    require_odd(lat.L, "symbol calculus")
    if lat.L % (lat.a * lat.b):
        raise LatticeConditionViolated(
            f"s = {lat.covolume()} is not 1/n: ab = {lat.a * lat.b} does not divide L = {lat.L}"
        )
    S, T = as_operator(S, lat.L), as_operator(T, lat.L)
    require_invariant(S, lat, "translation", rel_tol)
    require_invariant(T, lat, "translation", rel_tol)
    rhs = kappa("symbol_calculus", lat.L) * weyl_symbol(S) * weyl_symbol(T)
    return float(np.abs(rhs - weyl_symbol(S @ T)).max())


# -- decomposition into frame operators ------------------------------------


def decompose_into_frame_operators(T, lat: FiniteLattice, rel_tol: float = DEFAULT_REL_TOL):
    """Windows (g_i, h_i), i = 1..a, with sum_i S_{g_i, h_i} = T.

    g_i = delta_{i-1} and h_i = (b/L) T delta_{i-1}: the combs give
    sum_c S_{delta_c, delta_c} = (L/b) Id and T commutes with every pi(lambda).
    """
    T = as_operator(T, lat.L)
    require_invariant(T, lat, "translation", rel_tol)
    L = lat.L
    return [(delta(c, L), (lat.b / L) * T[:, c]) for c in range(lat.a)]


def decomposition_residual(T, lat: FiniteLattice) -> float:
    pairs = decompose_into_frame_operators(T, lat)
    return op_norm(sum(frame_operator(g, h, lat) for g, h in pairs) - T)


def generator_lower_bound(lat: FiniteLattice, kind: InvarianceKind = "translation") -> Fraction:
    if kind == "translation":
        return lat.covolume()
    if kind == "modulation":
        return half_lattice(lat).covolume()
    raise ValueError(f"unknown kind {kind!r}")


def window_count_diagnostic(lat: FiniteLattice) -> dict:
    return {
        "windows": lat.a,
        "ceil_covolume": math.ceil(lat.covolume()),
        "covolume": str(lat.covolume()),
    }
