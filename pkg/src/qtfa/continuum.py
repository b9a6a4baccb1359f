"""Sampled model of L^2(R): periodised grid signals and Riemann-sum identities.

A grid of N points with spacing dt covers one period [-N dt/2, N dt/2). A
time shift x must be a whole number of steps and a frequency w a whole
multiple of 1/(N dt); the sampled time-frequency shifts are then the finite
shifts of order N, and inner products carry the weight dt.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import OffGridLattice, PreconditionError
from .gabor import frame_operator, janssen_operator
from .operators import op_norm
from .phase_space import FiniteLattice
from .transforms import stft, symplectic_dft

GRID_TOL = 1e-9


@dataclass(frozen=True)
class SampledGrid:
    N: int
    dt: float

    def __post_init__(self):
        if self.N < 2 or self.N % 2 or not self.dt > 0:
            raise PreconditionError(f"need even N >= 2 and dt > 0, got N={self.N}, dt={self.dt}")

    @property
    def extent(self) -> float:
        return self.N * self.dt

    @property
    def df(self) -> float:
        return 1.0 / self.extent

    def times(self) -> np.ndarray:
        return (np.arange(self.N) - self.N // 2) * self.dt

    def inner(self, f, g) -> complex:
        return complex(self.dt * np.vdot(g, f))

    def norm(self, f) -> float:
        return math.sqrt(self.inner(f, f).real)

    def steps(self, alpha: float, beta: float) -> tuple[int, int]:
        """Lattice spacings in grid steps; ``OffGridLattice`` unless both are whole divisors of N."""
        A = alpha / self.dt
        B = beta * self.extent
        for name, v in (("alpha/dt", A), ("beta*N*dt", B)):
            if abs(v - round(v)) > GRID_TOL or round(v) < 1 or self.N % round(v):
                raise OffGridLattice(f"{name} = {v:.6g} is not a whole divisor of N={self.N}")
        return int(round(A)), int(round(B))

    def lattice(self, alpha: float, beta: float) -> FiniteLattice:
        a, b = self.steps(alpha, beta)
        return FiniteLattice(self.N, a, b)


def gaussian_window(grid: SampledGrid) -> np.ndarray:
    t = grid.times()
    g = (2**0.25 * np.exp(-np.pi * t**2)).astype(complex)
    return g / grid.norm(g)


def sampled_frame_operator(g, h, alpha: float, beta: float, grid: SampledGrid) -> np.ndarray:
    """sum over the lattice of <f, pi(l) g>_dt pi(l) h as a matrix on grid samples.

    The centring phase exp(-pi i B) of a sampled modulation cancels between
    analysis and synthesis, so this is dt times the finite frame operator.
    """
    lat = grid.lattice(alpha, beta)
    return grid.dt * frame_operator(g, h, lat)


def sampled_janssen(g, h, alpha: float, beta: float, grid: SampledGrid) -> np.ndarray:
    """(1/(alpha beta)) sum over (1/beta)Z x (1/alpha)Z of <h, pi(l) g>_dt pi(l)."""
    lat = grid.lattice(alpha, beta)
    cov = alpha * beta
    # finite Janssen carries 1/s with s = ab/N = alpha*beta, and inner products gain dt
    return grid.dt * janssen_operator(g, h, lat) * float(lat.covolume()) / cov


def sampled_janssen_residual(g, h, alpha: float, beta: float, grid: SampledGrid) -> float:
    return op_norm(
        sampled_frame_operator(g, h, alpha, beta, grid) - sampled_janssen(g, h, alpha, beta, grid)
    )


def sampled_frame_bounds(g, alpha: float, beta: float, grid: SampledGrid) -> tuple[float, float]:
    ev = np.linalg.eigvalsh(sampled_frame_operator(g, g, alpha, beta, grid))
    return float(max(ev[0], 0.0)), float(ev[-1])


# -- phase-space identities on the sampled grid -----------------------------


def _centred_symplectic_dft(F: np.ndarray) -> np.ndarray:
    """Riemann sum of the symplectic Fourier transform on a centred N x N grid.

    With spacings dt in time and 1/(N dt) in frequency the kernel becomes the
    finite one; the centring is undone with ifftshift/fftshift.
    """
    return np.fft.fftshift(symplectic_dft(np.fft.ifftshift(F)))


def poisson_residual(grid: SampledGrid, alpha: float = 1.0, beta: float = 1.0) -> float:
    """Symplectic Poisson summation for F(x, w) = exp(-pi (x^2 + w^2)) on alpha Z x beta Z.

    The left side sums F over the lattice analytically; the right side uses
    the grid-computed F_Omega F at adjoint-lattice points.  Evaluated at a
    set of probe points, returns the largest discrepancy.
    """
    t = grid.times()
    w = (np.arange(grid.N) - grid.N // 2) * grid.df
    F = np.exp(-np.pi * (t[:, None] ** 2 + w[None, :] ** 2))
    FO = _centred_symplectic_dft(F)

    # adjoint lattice (1/beta)Z x (1/alpha)Z restricted to the grid window
    p_step, q_step = 1.0 / beta, 1.0 / alpha
    ip = round(p_step / grid.dt)
    iq = round(q_step / grid.df)
    if abs(ip * grid.dt - p_step) > GRID_TOL or abs(iq * grid.df - q_step) > GRID_TOL:
        raise OffGridLattice("adjoint lattice points do not fall on the phase-space grid")
    c = grid.N // 2
    kp = np.arange(-(c // ip), (grid.N - 1 - c) // ip + 1)
    kq = np.arange(-(c // iq), (grid.N - 1 - c) // iq + 1)
    samples = FO[np.ix_(c + kp * ip, c + kq * iq)]
    P, Q = kp * p_step, kq * q_step

    probes = [(0.0, 0.0), (0.25, -0.1), (0.4, 0.3), (-0.35, 0.45)]
    worst = 0.0
    K = np.arange(-12, 13)
    for x, y in probes:
        lhs = np.exp(-np.pi * ((x - alpha * K)[:, None] ** 2 + (y - beta * K)[None, :] ** 2)).sum()
        # Omega(l, z) = x q - p y for l = (p, q), z = (x, y)
        phase = np.exp(2j * np.pi * (x * Q[None, :] - P[:, None] * y))
        rhs = (samples * phase).sum() / (alpha * beta)
        worst = max(worst, abs(lhs - rhs))
    return float(worst)


def tent(grid: SampledGrid) -> np.ndarray:
    t = grid.times()
    return np.maximum(1.0 - np.abs(t), 0.0).astype(complex)


def moyal_residual(grid: SampledGrid) -> float:
    """|sum |V_g f|^2 dx dw - ||f||^2 ||g||^2| with a tent f and exact norms.

    ||tent||_2^2 = 2/3 and the Gaussian window has unit norm, so the residual
    measures the quadrature error of the sampled STFT.
    """
    f = tent(grid)
    g = gaussian_window(grid)
    V = grid.dt * stft(f, g)
    total = float((np.abs(V) ** 2).sum()) * grid.dt * grid.df
    return abs(total - 2.0 / 3.0)


def janssen_identity_residual(grid: SampledGrid, alpha: float = 0.5, beta: float = 0.5) -> float:
    g = gaussian_window(grid)
    return sampled_janssen_residual(g, g, alpha, beta, grid)


IDENTITIES = {
    "poisson": lambda grid, cfg: poisson_residual(grid, cfg.get("alpha", 1.0), cfg.get("beta", 1.0)),
    "janssen": lambda grid, cfg: janssen_identity_residual(grid, cfg.get("alpha", 0.5), cfg.get("beta", 0.5)),
    "moyal": lambda grid, cfg: moyal_residual(grid),
}

DEFAULT_CONFIG = {
    "extent": 16.0,
    "ladder": [128, 256, 512],
    "floor": 1e-12,
    "slack": 1.1,
    "identities": [
        {"name": "poisson", "alpha": 0.5, "beta": 0.5, "threshold": 1e-8},
        {"name": "janssen", "alpha": 0.5, "beta": 0.5, "threshold": 1e-6},
        {"name": "moyal", "threshold": 1e-2},
    ],
}


@dataclass
class ConvergenceRow:
    identity: str
    N: int
    dt: float
    residual: float
    threshold: float | None
    within_threshold: bool
    monotone: bool | None


def convergence_report(config: dict | None = None) -> list[ConvergenceRow]:
    """Residual of each configured identity along a ladder of grids of fixed extent.

    ``monotone`` compares each entry with the previous one: the residual may
    grow by at most the ``slack`` factor, and residuals below ``floor`` (the
    machine-precision plateau) always pass.  The first entry has no flag.
    """
    cfg = dict(DEFAULT_CONFIG if config is None else config)
    extent = float(cfg.get("extent", 16.0))
    ladder = [int(n) for n in cfg.get("ladder", [])]
    floor = float(cfg.get("floor", 1e-12))
    slack = float(cfg.get("slack", 1.1))
    rows: list[ConvergenceRow] = []
    for ident in cfg.get("identities", []):
        name = ident["name"]
        if name not in IDENTITIES:
            raise PreconditionError(f"unknown identity {name!r}; known: {sorted(IDENTITIES)}")
        threshold = ident.get("threshold")
        prev = None
        for N in ladder:
            grid = SampledGrid(N, extent / N)
            r = IDENTITIES[name](grid, ident)
            mono = None if prev is None else bool(r <= slack * prev or r <= floor)
            ok = threshold is None or r <= threshold
            rows.append(ConvergenceRow(name, N, grid.dt, r, threshold, ok, mono))
            prev = r
    return rows


def report_ok(rows: list[ConvergenceRow]) -> bool:
    return all(r.within_threshold and r.monotone is not False for r in rows)


def rows_to_csv(rows: list[ConvergenceRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "N", "dt", "residual", "monotone"])
    for r in rows:
        w.writerow([r.identity, r.N, repr(r.dt), repr(r.residual), "" if r.monotone is None else r.monotone])
    return buf.getvalue()


def load_config(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read config {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"config {path} is not valid JSON: {exc}") from exc
