"""Gabor frame operators, Janssen's representation and the Heisenberg module.

Sequences indexed by a lattice are ``CoefficientSequence`` objects.  A
sequence living on an adjoint lattice remembers the lattice it is dual to
(``dual_of``); that fixes both its l^p weighting and the 1/s factor in its
twisted convolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from ._backend import kernels
from .errors import LatticeMismatch, NotAFrame, PreconditionError
from .operators import op_norm
from .phase_space import FiniteLattice, coefficient_twist, require_odd, root_of_unity
from .transforms import as_signal, inner, stft, tf_shift, tf_shift_matrix

TwistKind = Literal["heisenberg", "conjugate", "symmetric"]


@dataclass
class CoefficientSequence:
    """One complex value per point of ``lattice`` (row-major point order)."""

    lattice: FiniteLattice
    values: np.ndarray
    dual_of: FiniteLattice | None = field(default=None)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex).reshape(-1)
        if self.values.shape[0] != self.lattice.count:
            raise LatticeMismatch(
                f"{self.values.shape[0]} values for a lattice with {self.lattice.count} points"
            )
        if self.dual_of is not None and self.dual_of.adjoint() != self.lattice:
            raise LatticeMismatch(f"{self.lattice} is not the adjoint of {self.dual_of}")

    @classmethod
    def zeros(cls, lattice: FiniteLattice, dual_of: FiniteLattice | None = None):
        return cls(lattice, np.zeros(lattice.count, dtype=complex), dual_of)

    @classmethod
    def delta(cls, lattice: FiniteLattice, point=(0, 0), dual_of: FiniteLattice | None = None):
        seq = cls.zeros(lattice, dual_of)
        seq.values[lattice.index[tuple(v % lattice.L for v in point)]] = 1.0
        return seq

    @classmethod
    def on_adjoint(cls, lat: FiniteLattice, values) -> "CoefficientSequence":
        return cls(lat.adjoint(), values, dual_of=lat)

    def __getitem__(self, z) -> complex:
        m, n = (int(v) % self.lattice.L for v in z)
        return complex(self.values[self.lattice.index[(m, n)]])

    def weight(self) -> Fraction:
        """Measure of a single point: 1 on Lambda, 1/s(Lambda) on the adjoint of Lambda."""
        return 1 / self.dual_of.covolume() if self.dual_of is not None else Fraction(1)

    def norm(self, p: float = 2) -> float:
        if np.isinf(p):
            return float(np.abs(self.values).max(initial=0.0))
        return float((float(self.weight()) * (np.abs(self.values) ** p).sum()) ** (1.0 / p))

    def reflected(self) -> np.ndarray:
        """Values of lambda -> x(-lambda) in point order."""
        L = self.lattice.L
        idx = [self.lattice.index[((-m) % L, (-n) % L)] for m, n in self.lattice.points]
        return self.values[idx]

    def like(self, values) -> "CoefficientSequence":
        return CoefficientSequence(self.lattice, values, self.dual_of)

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice.as_triple(),
            "values": [[float(v.real), float(v.imag)] for v in self.values],
        }


# -- frame operators --------------------------------------------------------


def frame_operator(g, h, lat: FiniteLattice) -> np.ndarray:
    """S_{g,h,Lambda} f = sum over lambda of V_g f(lambda) pi(lambda) h."""
    g, h = as_signal(g, lat.L), as_signal(h, lat.L)
    return kernels.frame_operator(
        np.ascontiguousarray(g), np.ascontiguousarray(h), lat.a, lat.b
    )


def multiwindow_frame_operator(pairs: Sequence[tuple], lat: FiniteLattice) -> np.ndarray:
    pairs = list(pairs)
    if not pairs:
        raise PreconditionError("need at least one window pair")
    return sum(frame_operator(g, h, lat) for g, h in pairs)


def frame_bounds(g, lat: FiniteLattice) -> tuple[float, float]:
    ev = np.linalg.eigvalsh(frame_operator(g, g, lat))
    return float(max(ev[0], 0.0)), float(ev[-1])


def dual_window(g, lat: FiniteLattice, rel_tol: float = 1e-9) -> np.ndarray:
    """Canonical dual S_{g,g}^{-1} g; ``NotAFrame`` when A <= rel_tol * B."""
    g = as_signal(g, lat.L)
    A, B = frame_bounds(g, lat)
    if B == 0.0 or A <= rel_tol * B:
        raise NotAFrame(f"window does not generate a frame on {lat} (A={A:.3e}, B={B:.3e})")
    return np.linalg.solve(frame_operator(g, g, lat), g)


def tight_window(g, lat: FiniteLattice, rel_tol: float = 1e-9) -> np.ndarray:
    """S^{-1/2} g, whose frame operator is the identity."""
    g = as_signal(g, lat.L)
    A, B = frame_bounds(g, lat)
    if B == 0.0 or A <= rel_tol * B:
        raise NotAFrame(f"window does not generate a frame on {lat}")
    w, V = np.linalg.eigh(frame_operator(g, g, lat))
    return (V * w**-0.5) @ V.conj().T @ g


def janssen_operator(g, h, lat: FiniteLattice) -> np.ndarray:
    """(1/s) sum over the adjoint lattice of <h, pi(l) g> pi(l)."""
    g, h = as_signal(g, lat.L), as_signal(h, lat.L)
    L = lat.L
    out = np.zeros((L, L), dtype=complex)
    for lo in lat.adjoint().points:
        w = inner(h, tf_shift(lo, g))
        if w != 0:
            out += w * tf_shift_matrix(lo, L)
    return out / float(lat.covolume())


# -- Heisenberg module ------------------------------------------------------


def module_inner_left(f, g, lat: FiniteLattice) -> CoefficientSequence:
    """lambda -> <f, pi(lambda) g>."""
    f, g = as_signal(f, lat.L), as_signal(g, lat.L)
    V = stft(f, g)
    pts = lat.point_array
    return CoefficientSequence(lat, V[pts[:, 0], pts[:, 1]])


def module_inner_right(f, g, lat: FiniteLattice) -> CoefficientSequence:
    """l -> <g, pi(l)^* f> on the adjoint lattice."""
    f, g = as_signal(f, lat.L), as_signal(g, lat.L)
    adj = lat.adjoint()
    # <g, pi(l)^* f> = <pi(l) g, f>
    vals = [inner(tf_shift(lo, g), f) for lo in adj.points]
    return CoefficientSequence(adj, vals, dual_of=lat)


def left_action(seq: CoefficientSequence, f) -> np.ndarray:
    return integrated_representation(seq) @ as_signal(f, seq.lattice.L)


def right_action(f, seq: CoefficientSequence) -> np.ndarray:
    """f b = (1/s) sum b(l) pi(l)^* f over the adjoint lattice."""
    if seq.dual_of is None:
        raise LatticeMismatch("right action needs a sequence on an adjoint lattice")
    return integrated_representation(seq) @ as_signal(f, seq.lattice.L)


def integrated_representation(seq: CoefficientSequence) -> np.ndarray:
    """sum a(l) pi(l) on a lattice; (1/s) sum b(l) pi(l)^* on an adjoint lattice."""
    L = seq.lattice.L
    out = np.zeros((L, L), dtype=complex)
    adjoint = seq.dual_of is not None
    for z, v in zip(seq.lattice.points, seq.values):
        if v != 0:
            U = tf_shift_matrix(z, L)
            out += v * (U.conj().T if adjoint else U)
    if adjoint:
        out /= float(seq.dual_of.covolume())
    return out


def _kind_code(kind: TwistKind) -> int:
    if kind in ("heisenberg", "conjugate"):
        return 0
    if kind == "symmetric":
        return 1
    raise PreconditionError(f"unknown twist kind {kind!r}")


def twisted_convolution(
    x: CoefficientSequence, y: CoefficientSequence, kind: TwistKind = "heisenberg"
) -> CoefficientSequence:
    """(x # y)(l) = sum_mu x(mu) y(l - mu) c(mu, l - mu).

    ``kind`` picks c (heisenberg), its conjugate, or the symmetric cocycle.
    Sequences on an adjoint lattice carry the extra factor 1/s.
    """
    if x.lattice != y.lattice or x.dual_of != y.dual_of:
        raise LatticeMismatch(f"sequences live on {x.lattice} and {y.lattice}")
    L = x.lattice.L
    h = require_odd(L, "symmetric cocycle") if kind == "symmetric" else (L + 1) // 2
    code = _kind_code(kind)
    pts = x.lattice.point_array
    xv, yv = np.ascontiguousarray(x.values), np.ascontiguousarray(y.values)
    if kind == "conjugate":
        r = np.conj(kernels.twisted_convolution(xv.conj(), yv.conj(), pts, L, code, h))
    else:
        r = kernels.twisted_convolution(xv, yv, pts, L, code, h)
    if x.dual_of is not None:
        r = r / float(x.dual_of.covolume())
    return x.like(r)


def _self_cocycle(pts: np.ndarray, L: int, kind: TwistKind) -> np.ndarray:
    m, n = pts[:, 0], pts[:, 1]
    if kind == "heisenberg":
        return root_of_unity(-m * n, L)
    if kind == "conjugate":
        return root_of_unity(m * n, L)
    require_odd(L, "symmetric cocycle")
    return np.ones(len(pts), dtype=complex)  # c'(l, l) = 1


def twisted_involution(x: CoefficientSequence, kind: TwistKind = "heisenberg") -> CoefficientSequence:
    """x^*(l) = c(l, l) conj(x(-l))."""
    c = _self_cocycle(x.lattice.point_array, x.lattice.L, kind)
    return x.like(c * np.conj(x.reflected()))


def rho_phase(lat_or_adj: FiniteLattice, points=None) -> np.ndarray:
    """psi(l) = exp(pi i l1 l2) on canonical representatives."""
    return np.conj(coefficient_twist(lat_or_adj, points))


def rho_tilde(b: CoefficientSequence) -> CoefficientSequence:
    """rho(b)(l) = b(-l) psi(l)."""
    return b.like(b.reflected() * rho_phase(b.lattice))


def rho_tilde_inverse(b: CoefficientSequence) -> CoefficientSequence:
    # psi is even, so the inverse reflects and conjugates the phase
    return b.like(b.reflected() * np.conj(rho_phase(b.lattice)))


def heisenberg_norm(g, lat: FiniteLattice) -> float:
    """||g||_E = ||S_{g,g,Lambda}||_op^{1/2}."""
    return float(np.sqrt(op_norm(frame_operator(g, g, lat))))


__all__ = [
    "CoefficientSequence",
    "frame_operator",
    "multiwindow_frame_operator",
    "frame_bounds",
    "dual_window",
    "tight_window",
    "janssen_operator",
    "module_inner_left",
    "module_inner_right",
    "left_action",
    "right_action",
    "integrated_representation",
    "twisted_convolution",
    "twisted_involution",
    "rho_tilde",
    "rho_tilde_inverse",
    "heisenberg_norm",
]
