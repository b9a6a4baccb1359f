"""Deterministic random inputs.

Values come from numpy's PCG64 generator seeded with ``(seed, kind)``, so the
same seed gives the same bytes on every platform and different kinds drawn
with one seed are independent.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

Kind = Literal["signal", "operator", "coefficient", "symbol"]
_KIND_TAG = {"signal": 1, "operator": 2, "coefficient": 3, "symbol": 4}


def generator(seed: int, kind: Kind = "signal") -> np.random.Generator:
    if kind not in _KIND_TAG:
        raise ValueError(f"unknown kind {kind!r}")
    return np.random.Generator(np.random.PCG64([int(seed), _KIND_TAG[kind]]))


def seeded_random(kind: Kind, seed: int, shape, normalize: bool = False) -> np.ndarray:
    """Complex Gaussian array; ``normalize`` scales to unit l^2 (Frobenius) norm."""
    rng = generator(seed, kind)
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    x = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    if normalize:
        x /= np.linalg.norm(x)
    return x
