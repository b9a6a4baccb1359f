"""Finite Weyl-Heisenberg quantum time-frequency analysis.

Signals live on Z_L, phase space is Z_L x Z_L, and operators are L x L
complex matrices.  The submodules cover phase-space arithmetic
(``phase_space``), signal transforms (``transforms``), operator symbols and
convolutions (``operators``), Gabor systems and Heisenberg modules
(``gabor``), lattice-invariant operators (``invariant``) and the sampled
continuum model (``continuum``).
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import (
    ConstantsMismatch,
    EvenOrderUnsupported,
    InconsistentConstant,
    LatticeConditionViolated,
    LatticeMismatch,
    ModelMismatch,
    NonDivisor,
    NotAFrame,
    NotInvariant,
    NumericalError,
    OffGridLattice,
    PreconditionError,
    QtfaError,
    SupportLeak,
    SupportViolation,
    Unhalvable,
    ZeroSymbolAtOrigin,
)
from .gabor import (
    CoefficientSequence,
    dual_window,
    frame_bounds,
    frame_operator,
    janssen_operator,
    tight_window,
    twisted_convolution,
)
from .invariant import (
    analyze_translation_invariant,
    fourier_wigner_periodize,
    modulation_janssen,
    operator_periodize,
    synthesize_modulation_invariant,
    synthesize_translation_invariant,
    theta,
    trig_samples,
)
from .operators import (
    fourier_wigner,
    modulate_op,
    spreading,
    translate_op,
    weyl_quantize,
    weyl_symbol,
)
from .phase_space import FiniteLattice, half_lattice, make_lattice
from .transforms import ambiguity, cross_wigner, parity_matrix, stft, symplectic_dft, tf_shift

__all__ = [
    "ambiguity",
    "analyze_translation_invariant",
    "BACKEND",
    "CoefficientSequence",
    "ConstantsMismatch",
    "cross_wigner",
    "dual_window",
    "EvenOrderUnsupported",
    "FiniteLattice",
    "fourier_wigner",
    "fourier_wigner_periodize",
    "frame_bounds",
    "frame_operator",
    "half_lattice",
    "InconsistentConstant",
    "janssen_operator",
    "LatticeConditionViolated",
    "LatticeMismatch",
    "make_lattice",
    "ModelMismatch",
    "modulate_op",
    "modulation_janssen",
    "NonDivisor",
    "NotAFrame",
    "NotInvariant",
    "NumericalError",
    "OffGridLattice",
    "operator_periodize",
    "parity_matrix",
    "PreconditionError",
    "QtfaError",
    "spreading",
    "stft",
    "SupportLeak",
    "SupportViolation",
    "symplectic_dft",
    "synthesize_modulation_invariant",
    "synthesize_translation_invariant",
    "tf_shift",
    "theta",
    "tight_window",
    "translate_op",
    "trig_samples",
    "twisted_convolution",
    "Unhalvable",
    "weyl_quantize",
    "weyl_symbol",
    "ZeroSymbolAtOrigin",
]
