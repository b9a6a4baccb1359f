"""Brute-force references, constant derivation and seeded random inputs."""

from .derive import derive_constants
from .oracle import naive_frame_operator, naive_spreading
from .rng import seeded_random

__all__ = ["derive_constants", "naive_frame_operator", "naive_spreading", "seeded_random"]
