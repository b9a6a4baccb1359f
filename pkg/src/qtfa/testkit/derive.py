"""Fit every normalisation constant of the finite model by brute force.

Each identity is written as ``lhs = kappa * base`` with both sides computed
without consulting the constants table.  kappa is fitted by least squares
on seeded random inputs at several orders L (and lattices, where the
identity involves one); the fitted numbers must match a single functional
form from ``qtfa.constants.FORMS`` at every point, otherwise
``InconsistentConstant`` is raised.  Phase conventions are found by
exhaustive search over roots of unity.

Run ``python -m qtfa.testkit --write`` to regenerate the table.
"""

from __future__ import annotations

import argparse
import logging
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import numpy as np

from ..constants import FORMS, PHASE_FORMS, ConstantsTable, default_path
from ..errors import InconsistentConstant
from ..gabor import frame_operator, tight_window
from ..operators import (
    conv_fn_op,
    conv_op_op,
    fourier_wigner,
    reflect_op,
    spreading,
    translate_op,
    weyl_quantize,
    weyl_symbol,
)
from ..phase_space import FiniteLattice, chirp, root_of_unity, symplectic_character
from ..transforms import (
    cross_wigner,
    grid_convolve,
    inner,
    parity,
    parity_matrix,
    periodize,
    stft,
    symplectic_dft,
    tf_shift,
    tf_shift_matrix,
    translate,
)
from .rng import seeded_random

log = logging.getLogger(__name__)

FIT_TOL = 1e-10
DEFAULT_LS = (3, 4, 5, 7, 9)
DEFAULT_SEED = 20240601

# A sample is (lhs, base, L, s): lhs should equal kappa(L, s) * base.
Sample = tuple[np.ndarray, np.ndarray, int, Fraction]


def _lattices(L: int, cond: Callable[[int, int], bool] = lambda a, b: True) -> list[FiniteLattice]:
    divs = [d for d in range(1, L + 1) if L % d == 0]
    return [FiniteLattice(L, a, b) for a in divs for b in divs if cond(a, b)]


class _Inputs:
    def __init__(self, seed: int):
        self.seed = seed
        self.count = 0

    def _next(self) -> int:
        self.count += 1
        return self.seed * 1000 + self.count

    def signal(self, L):
        return seeded_random("signal", self._next(), L)

    def operator(self, L):
        return seeded_random("operator", self._next(), (L, L))

    def symbol(self, L):
        return seeded_random("symbol", self._next(), (L, L))


def _beta_raw(w, S, phase_exp: int):
    L = S.shape[0]
    h = (L + 1) // 2
    U = tf_shift_matrix((h * w[0], h * w[1]), L)
    return root_of_unity(phase_exp * w[0] * w[1], L) * (U @ S @ U)


def _mod_invariant(S, lat: FiniteLattice) -> np.ndarray:
    L = lat.L
    h = (L + 1) // 2
    out = np.zeros_like(S)
    for p in lat.points:
        out += _beta_raw(p, S, -h * h)
    return out


def _trans_invariant(S, lat: FiniteLattice) -> np.ndarray:
    out = np.zeros_like(S)
    for p in lat.points:
        out += translate_op(p, S)
    return out


def _double(F):
    L = F.shape[0]
    idx = (2 * np.arange(L)) % L
    return F[np.ix_(idx, idx)]


# -- identities ---------------------------------------------------------------
# Each generator yields samples for one order L.


def _moyal(L, rnd) -> Iterator[Sample]:
    f1, g1, f2, g2 = (rnd.signal(L) for _ in range(4))
    lhs = np.vdot(stft(f2, g2), stft(f1, g1))
    yield np.array([lhs]), np.array([inner(f1, f2) * np.conj(inner(g1, g2))]), L, Fraction(1)


def _spreading_plancherel(L, rnd):
    S = rnd.operator(L)
    yield np.array([np.linalg.norm(spreading(S)) ** 2]), np.array([np.linalg.norm(S) ** 2]), L, Fraction(1)


def _wigner_sum(L, rnd):
    f, g = rnd.signal(L), rnd.signal(L)
    yield np.array([cross_wigner(f, g).sum()]), np.array([inner(f, g)]), L, Fraction(1)


def _wigner_doubling(L, rnd, phase_exp: int):
    f, g = rnd.signal(L), rnd.signal(L)
    m = np.arange(L)
    base = root_of_unity(phase_exp * np.outer(m, m), L) * _double(stft(f, parity(g)))
    yield cross_wigner(f, g), base, L, Fraction(1)


def _weak_pairing(L, rnd):
    S, f, g = rnd.operator(L), rnd.signal(L), rnd.signal(L)
    lhs = inner(S @ f, g)
    base = np.sum(weyl_symbol(S) * np.conj(cross_wigner(g, f))) / L
    yield np.array([lhs]), np.array([base]), L, Fraction(1)


def _weyl_parity(L, rnd):
    sigma = rnd.symbol(L)
    P = parity_matrix(L)
    base = sum(sigma[m, n] * translate_op((m, n), P) for m in range(L) for n in range(L))
    yield weyl_quantize(sigma), base, L, Fraction(1)


def _symplectic_parity(L, rnd):
    P = parity_matrix(L)
    inv_chirp = np.conj(chirp(L))
    for z in [(0, 0), (1, 0), (0, 1), (1, 2 % L), (L - 1, 2 % L)]:
        char = symplectic_character(z, L).conj()  # exp(2 pi i Omega(z, z')/L) over z'
        lhs = sum(
            char[m, n] * inv_chirp[m, n] * tf_shift_matrix((m, n), L)
            for m in range(L)
            for n in range(L)
        ) / L
        yield lhs, translate_op(z, P), L, Fraction(1)


def _op_convolution(L, rnd):
    S, T = rnd.operator(L), rnd.operator(L)
    yield conv_op_op(S, T), grid_convolve(weyl_symbol(S), weyl_symbol(T)), L, Fraction(1)


def _fn_op_convolution(L, rnd):
    f, S = rnd.symbol(L), rnd.operator(L)
    yield weyl_symbol(conv_fn_op(f, S)), grid_convolve(f, weyl_symbol(S)), L, Fraction(1)


def _fourier_wigner_convolution(L, rnd):
    S, T = rnd.operator(L), rnd.operator(L)
    yield symplectic_dft(conv_op_op(S, T)), fourier_wigner(S) * fourier_wigner(T), L, Fraction(1)


def _theta(L, rnd):
    S = rnd.operator(L)
    yield _double(fourier_wigner(S @ parity_matrix(L))), weyl_symbol(S), L, Fraction(1)


def _weyl_symbol_calculus(L, rnd):
    h = (L + 1) // 2
    idx = (h * np.arange(L)) % L
    for lat in _lattices(L, lambda a, b: (2 * L) % (a * b) == 0):
        S = _mod_invariant(rnd.operator(L), lat)
        T = _mod_invariant(rnd.operator(L), lat)
        lhs = weyl_symbol(S @ T)[np.ix_(idx, idx)]
        yield lhs, fourier_wigner(S) * fourier_wigner(reflect_op(T)), L, lat.covolume()


def _janssen(L, rnd):
    for lat in _lattices(L):
        g, h = rnd.signal(L), rnd.signal(L)
        base = np.zeros((L, L), dtype=complex)
        for lo in lat.adjoint().points:
            base += inner(h, tf_shift(lo, g)) * tf_shift_matrix(lo, L)
        yield frame_operator(g, h, lat), base, L, lat.covolume()


def _poisson(L, rnd):
    for lat in _lattices(L):
        F = rnd.symbol(L)
        FO = symplectic_dft(F)
        base = sum(FO[lo] * symplectic_character(lo, L).conj() for lo in lat.adjoint().points)
        yield periodize(F, lat), base, L, lat.covolume()


def _modulation_janssen(L, rnd):
    P = parity_matrix(L)
    for lat in _lattices(L):
        S = rnd.operator(L)
        sigma = weyl_symbol(S)
        base = sum(sigma[lo] * translate_op(lo, P) for lo in lat.adjoint().points)
        yield _mod_invariant(S, lat), base / float(lat.covolume()), L, lat.covolume()


def _trig_series(L, rnd):
    for lat in _lattices(L):
        T = _mod_invariant(rnd.operator(L), lat)
        sigma = weyl_symbol(T)
        base = sum(sigma[lo] * symplectic_character(lo, L).conj() for lo in lat.adjoint().points)
        yield fourier_wigner(T), base, L, lat.covolume()


def _calculus(L, rnd):
    for lat in _lattices(L, lambda a, b: (2 * L) % (a * b) == 0):
        S = _mod_invariant(rnd.operator(L), lat)
        T = _mod_invariant(rnd.operator(L), lat)
        lhs = _double(fourier_wigner(S @ T))
        yield lhs, grid_convolve(weyl_symbol(S), weyl_symbol(reflect_op(T))), L, lat.covolume()


def _symbol_calculus(L, rnd):
    for lat in _lattices(L, lambda a, b: L % (a * b) == 0):
        S = _trans_invariant(rnd.operator(L), lat)
        T = _trans_invariant(rnd.operator(L), lat)
        yield weyl_symbol(S @ T), weyl_symbol(S) * weyl_symbol(T), L, lat.covolume()


def _heisenberg_embedding(L, rnd):
    for lat in _lattices(L, lambda a, b: a * b <= L):
        try:
            g = tight_window(rnd.signal(L), lat)
        except Exception:  # noqa: BLE001 - a random window that is not a frame is skipped
            continue
        ratio_base = np.linalg.norm(frame_operator(g, g, lat), 2)
        yield np.array([np.linalg.norm(g) ** 2]), np.array([ratio_base]), L, lat.covolume()


# (name, generator, odd orders only)
IDENTITIES: list[tuple[str, Callable, bool]] = [
    ("moyal", _moyal, False),
    ("spreading_plancherel", _spreading_plancherel, False),
    ("janssen", _janssen, False),
    ("poisson", _poisson, False),
    ("op_convolution", _op_convolution, True),
    ("fn_op_convolution", _fn_op_convolution, True),
    ("fourier_wigner_convolution", _fourier_wigner_convolution, True),
    ("wigner_sum", _wigner_sum, True),
    ("weak_pairing", _weak_pairing, True),
    ("weyl_parity", _weyl_parity, True),
    ("symplectic_parity", _symplectic_parity, True),
    ("theta", _theta, True),
    ("weyl_symbol_calculus", _weyl_symbol_calculus, True),
    ("modulation_janssen", _modulation_janssen, True),
    ("trig_series", _trig_series, True),
    ("calculus", _calculus, True),
    ("symbol_calculus", _symbol_calculus, True),
    ("heisenberg_embedding", _heisenberg_embedding, False),
]


def fit(lhs: np.ndarray, base: np.ndarray) -> tuple[complex, float]:
    """Least-squares kappa and the relative residual of lhs - kappa * base."""
    lhs, base = np.asarray(lhs).ravel(), np.asarray(base).ravel()
    denom = np.vdot(base, base)
    if abs(denom) == 0:
        return 0j, float(np.abs(lhs).max(initial=0.0))
    k = np.vdot(base, lhs) / denom
    scale = max(float(np.abs(lhs).max()), 1e-300)
    return complex(k), float(np.abs(lhs - k * base).max() / scale)


def identify_form(name: str, points: list[tuple[int, Fraction, complex]]) -> str:
    for form, fn in FORMS.items():
        if all(abs(k - float(fn(L, s))) <= 1e-9 * max(1.0, abs(k)) for L, s, k in points):
            return form
    shown = ", ".join(f"L={L} s={s}: {k:.6g}" for L, s, k in points[:6])
    raise InconsistentConstant(f"{name}: fitted values match no single form ({shown})")


def identify_phase(name: str, exps: dict[int, int]) -> str:
    for form, fn in PHASE_FORMS.items():
        if all((fn(L) - e) % L == 0 for L, e in exps.items()):
            return form
    raise InconsistentConstant(f"{name}: exponents {exps} match no phase form")


def search_modulation_phase(L: int, rnd) -> int:
    """Exponent e with phi(w) = w^{e w1 w2} making F_W(beta_w S) = T_w F_W(S).

    Searches every 2L-th root exp(pi i k w1 w2 / L); only even k are
    L-periodic, and the result is returned as e = k/2.
    """
    S = rnd.operator(L)
    FS = fourier_wigner(S)
    h = (L + 1) // 2
    hits = []
    for k in range(2 * L):
        ok = True
        for w in [(1, 0), (0, 1), (1, 1), (2 % L, 1), (1, L - 1)]:
            U = tf_shift_matrix((h * w[0], h * w[1]), L)
            phi = np.exp(1j * np.pi * k * w[0] * w[1] / L)
            if np.abs(fourier_wigner(phi * (U @ S @ U)) - translate(FS, w)).max() > 1e-10:
                ok = False
                break
        if ok:
            hits.append(k)
    if len(hits) != 1 or hits[0] % 2:
        raise InconsistentConstant(f"modulation phase search at L={L} found {hits}")
    return hits[0] // 2


def search_doubling_phase(L: int, rnd) -> int:
    f, g = rnd.signal(L), rnd.signal(L)
    W = cross_wigner(f, g)
    V2 = _double(stft(f, parity(g)))
    m = np.arange(L)
    hits = []
    for c in range(L):
        base = root_of_unity(c * np.outer(m, m), L) * V2
        _, res = fit(W, base)
        if res < FIT_TOL:
            hits.append(c)
    if len(hits) != 1:
        raise InconsistentConstant(f"Wigner doubling phase search at L={L} found {hits}")
    return hits[0]


def derive_constants(Ls: Iterable[int] = DEFAULT_LS, seed: int = DEFAULT_SEED) -> ConstantsTable:
    Ls = sorted(set(int(L) for L in Ls))
    odd = [L for L in Ls if L % 2 and L >= 3]
    if not Ls or not odd:
        raise ValueError("need at least one odd order L >= 3")
    rnd = _Inputs(seed)
    entries: dict[str, dict] = {}

    for name, gen, odd_only in IDENTITIES:
        points, worst, used = [], 0.0, []
        for L in odd if odd_only else Ls:
            for lhs, base, LL, s in gen(L, rnd):
                k, res = fit(lhs, base)
                if res > FIT_TOL:
                    raise InconsistentConstant(f"{name}: residual {res:.2e} at L={LL}, s={s}")
                points.append((LL, s, k))
                worst = max(worst, res)
            used.append(L)
        if not points:
            raise InconsistentConstant(f"{name}: no admissible inputs for orders {Ls}")
        entries[name] = {"form": identify_form(name, points), "orders": used, "residual": f"{worst:.1e}"}
        log.info("%s -> %s", name, entries[name]["form"])

    exps = {L: search_modulation_phase(L, rnd) for L in odd}
    entries["modulation_phase"] = {
        "form": identify_phase("modulation_phase", exps),
        "orders": odd,
        "residual": "exhaustive",
    }
    dexps = {L: search_doubling_phase(L, rnd) for L in odd}
    dform = identify_phase("wigner_doubling_phase", dexps)
    entries["wigner_doubling_phase"] = {"form": dform, "orders": odd, "residual": "exhaustive"}

    points, worst = [], 0.0
    for L in odd:
        for lhs, base, LL, s in _wigner_doubling(L, rnd, PHASE_FORMS[dform](L)):
            k, res = fit(lhs, base)
            if res > FIT_TOL:
                raise InconsistentConstant(f"wigner_doubling: residual {res:.2e} at L={L}")
            points.append((LL, s, k))
            worst = max(worst, res)
    entries["wigner_doubling"] = {
        "form": identify_form("wigner_doubling", points),
        "orders": odd,
        "residual": f"{worst:.1e}",
    }
    return ConstantsTable(entries=dict(sorted(entries.items())))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Derive the finite-model constants table.")
    parser.add_argument("--orders", type=int, nargs="+", default=list(DEFAULT_LS))
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--write", action="store_true", help="overwrite the packaged table")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    table = derive_constants(args.orders, args.seed)
    for name, entry in table.entries.items():
        print(f"{name:28s} {entry['form']:6s} residual {entry['residual']}")
    if args.write:
        table.dump(default_path())
        print(f"wrote {default_path()}")
    return 0
