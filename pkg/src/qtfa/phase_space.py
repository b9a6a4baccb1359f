"""Finite phase space Z_L x Z_L: points, separable lattices, symplectic form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Literal, NamedTuple

import numpy as np

from .errors import EvenOrderUnsupported, NonDivisor, PreconditionError, Unhalvable

CocycleKind = Literal["heisenberg", "symmetric"]


class PhasePoint(NamedTuple):
    """Time index ``m`` and frequency index ``n``."""

    m: int
    n: int

    def reduce(self, L: int) -> "PhasePoint":
        return PhasePoint(self.m % L, self.n % L)

    def __neg__(self) -> "PhasePoint":  # type: ignore[override]
        return PhasePoint(-self.m, -self.n)


def as_point(z: Iterable[int], L: int | None = None) -> PhasePoint:
    coords = [int(v) for v in z]
    if len(coords) != 2:
        raise PreconditionError(f"a phase-space point has two coordinates, got {len(coords)}")
    p = PhasePoint(*coords)
    return p.reduce(L) if L is not None else p


def half(L: int) -> int:
    """The inverse of 2 modulo an odd ``L``."""
    if L % 2 == 0:
        raise EvenOrderUnsupported(f"2 is not invertible modulo even L={L}")
    return (L + 1) // 2


def require_odd(L: int, what: str = "operation") -> int:
    if L % 2 == 0:
        raise EvenOrderUnsupported(f"{what} needs half-integer phases; L={L} is even")
    return (L + 1) // 2


@dataclass(frozen=True)
class FiniteLattice:
    """The separable lattice aZ_L x bZ_L inside Z_L x Z_L."""

    L: int
    a: int
    b: int

    def __post_init__(self):
        if self.L < 2 or self.a < 1 or self.b < 1:
            raise PreconditionError(f"need L >= 2, a >= 1, b >= 1; got {self.as_triple()}")
        if self.L % self.a or self.L % self.b:
            raise NonDivisor(f"spacings a={self.a}, b={self.b} must divide L={self.L}")

    def as_triple(self) -> list[int]:
        return [self.L, self.a, self.b]

    @property
    def time_count(self) -> int:
        return self.L // self.a

    @property
    def freq_count(self) -> int:
        return self.L // self.b

    @property
    def count(self) -> int:
        return self.time_count * self.freq_count

    @cached_property
    def points(self) -> tuple[PhasePoint, ...]:
        return tuple(
            PhasePoint(m, n)
            for m in range(0, self.L, self.a)
            for n in range(0, self.L, self.b)
        )

    @cached_property
    def index(self) -> dict[PhasePoint, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def point_array(self) -> np.ndarray:
        """Points as an (N, 2) integer array in row-major order."""
        return np.array(self.points, dtype=np.int64).reshape(-1, 2)

    def contains(self, z: Iterable[int]) -> bool:
        m, n = as_point(z, self.L)
        return m % self.a == 0 and n % self.b == 0

    def mask(self) -> np.ndarray:
        """Boolean L x L indicator of the lattice on the phase-space grid."""
        out = np.zeros((self.L, self.L), dtype=bool)
        out[:: self.a, :: self.b] = True
        return out

    def covolume(self) -> Fraction:
        return Fraction(self.a * self.b, self.L)

    def adjoint(self) -> "FiniteLattice":
        return FiniteLattice(self.L, self.L // self.b, self.L // self.a)

    def generators(self) -> tuple[PhasePoint, PhasePoint]:
        return PhasePoint(self.a % self.L, 0), PhasePoint(0, self.b % self.L)

    def __str__(self) -> str:
        return f"({self.L},{self.a},{self.b})"


def make_lattice(L: int, a: int, b: int) -> FiniteLattice:
    return FiniteLattice(int(L), int(a), int(b))


def adjoint_lattice(lat: FiniteLattice) -> FiniteLattice:
    return lat.adjoint()


def covolume(lat: FiniteLattice) -> Fraction:
    return lat.covolume()


def lattice_points(lat: FiniteLattice) -> list[PhasePoint]:
    return list(lat.points)


def symplectic_form(z: Iterable[int], zp: Iterable[int]) -> int:
    """Omega(z, z') = m' n - m n' as an exact integer."""
    m, n = as_point(z)
    mp, np_ = as_point(zp)
    return mp * n - m * np_


def cocycle(kind: CocycleKind, z: Iterable[int], zp: Iterable[int], L: int) -> complex:
    m1, n1 = as_point(z)
    m2, n2 = as_point(zp)
    if kind == "heisenberg":
        e = (-m1 * n2) % L
    elif kind == "symmetric":
        h = require_odd(L, "symmetric cocycle")
        e = (h * (m2 * n1 - m1 * n2)) % L
    else:
        raise PreconditionError(f"unknown cocycle kind {kind!r}")
    return root_of_unity(e, L)


def root_of_unity(e: int | np.ndarray, L: int):
    """exp(2 pi i e / L) with the exponent reduced first, so it is exact at 1."""
    e = np.mod(e, L)
    if np.ndim(e) == 0:
        return complex(1.0) if e == 0 else complex(np.exp(2j * np.pi * int(e) / L))
    return np.exp(2j * np.pi * e / L)


def half_lattice(lat: FiniteLattice) -> FiniteLattice:
    """The lattice of all z with 2z in ``lat``.

    For odd L halving is a bijection of Z_L and the result equals ``lat``
    as a set; for even L both spacings must be even.
    """
    if lat.L % 2 == 1:
        return FiniteLattice(lat.L, lat.a, lat.b)
    if lat.a % 2 == 0 and lat.b % 2 == 0:
        return FiniteLattice(lat.L, lat.a // 2, lat.b // 2)
    raise Unhalvable(f"cannot halve {lat}: L is even and a spacing is odd")


def chirp_exponents(L: int) -> np.ndarray:
    """Integer exponents h*m*n mod L of the chirp exp(pi i x w) on Z_L x Z_L."""
    h = require_odd(L, "chirp")
    m = np.arange(L, dtype=np.int64)
    return (h * np.outer(m, m)) % L


def chirp(L: int) -> np.ndarray:
    return root_of_unity(chirp_exponents(L), L)


def symplectic_character(z: Iterable[int], L: int) -> np.ndarray:
    """Grid of exp(2 pi i Omega(z', z) / L) over z' (rows m', columns n')."""
    m0, n0 = as_point(z)
    m = np.arange(L, dtype=np.int64)
    e = np.subtract.outer(m0 * m, m * n0)  # m0*n' - m'*n0 = Omega(z', z)
    return root_of_unity(e.T, L)


def coefficient_twist(lat_or_L, points=None) -> np.ndarray:
    """Phase attached to pi(lambda) in operator Fourier series.

    Odd L uses the exact half phase exp(-pi i m n) realised as w^{-h m n};
    even L has no such phase, and the sign (-1)^{m n} on canonical
    representatives is used instead.
    """
    if isinstance(lat_or_L, FiniteLattice):
        L = lat_or_L.L
        pts = lat_or_L.point_array if points is None else np.asarray(points)
    else:
        L = int(lat_or_L)
        pts = np.asarray(points)
    m, n = pts[:, 0] % L, pts[:, 1] % L
    if L % 2:
        return root_of_unity(-((L + 1) // 2) * m * n, L)
    return np.where((m * n) % 2 == 0, 1.0, -1.0).astype(complex)
