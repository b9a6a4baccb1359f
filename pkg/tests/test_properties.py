import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from qtfa.gabor import frame_operator, janssen_operator
from qtfa.invariant import (
    analyze_translation_invariant,
    fourier_wigner_periodize,
    invariance_defect,
    operator_periodize,
    synthesize_translation_invariant,
)
from qtfa.operators import (
    fourier_wigner,
    modulate_op,
    op_norm,
    spreading,
    spreading_synthesis,
    translate_op,
    weyl_quantize,
    weyl_symbol,
)
from qtfa.phase_space import FiniteLattice
from qtfa.testkit import seeded_random
from qtfa.transforms import symplectic_dft, symplectic_modulate, translate

from conftest import divisors

orders = st.sampled_from([2, 3, 4, 5, 6, 8, 9, 10, 12])
odd_orders = st.sampled_from([3, 5, 7, 9])
seeds = st.integers(0, 2**32 - 1)


@st.composite
def lattices(draw, order=orders):
    L = draw(order)
    return FiniteLattice(L, draw(st.sampled_from(divisors(L))), draw(st.sampled_from(divisors(L))))


@settings(max_examples=40, deadline=None)
@given(lattices(), seeds)
def test_janssen_property(lat, seed):
    g = seeded_random("signal", seed, lat.L)
    h = seeded_random("signal", seed ^ 1, lat.L)
    assert op_norm(frame_operator(g, h, lat) - janssen_operator(g, h, lat)) < 1e-10


@settings(max_examples=40, deadline=None)
@given(lattices(), seeds)
def test_periodisation_is_invariant_and_round_trips(lat, seed):
    T = operator_periodize(seeded_random("operator", seed, (lat.L, lat.L)), lat)
    assert invariance_defect(T, lat).is_invariant
    k = analyze_translation_invariant(T, lat)
    assert op_norm(synthesize_translation_invariant(k, lat) - T) < 1e-10 * max(1, op_norm(T))


@settings(max_examples=30, deadline=None)
@given(lattices(odd_orders), seeds)
def test_modulation_periodisation_is_invariant(lat, seed):
    T = fourier_wigner_periodize(seeded_random("operator", seed, (lat.L, lat.L)), lat)
    assert invariance_defect(T, lat, "modulation").is_invariant


@settings(max_examples=30, deadline=None)
@given(odd_orders, seeds, st.integers(0, 100), st.integers(0, 100))
def test_covariance_property(L, seed, m, n):
    S = seeded_random("operator", seed, (L, L))
    sigma = weyl_symbol(S)
    assert np.abs(weyl_symbol(translate_op((m, n), S)) - translate(sigma, (m, n))).max() < 1e-11
    assert np.abs(weyl_symbol(modulate_op((m, n), S)) - symplectic_modulate(sigma, (m, n))).max() < 1e-11


@settings(max_examples=30, deadline=None)
@given(orders, seeds)
def test_spreading_bijective(L, seed):
    S = seeded_random("operator", seed, (L, L))
    assert np.abs(spreading_synthesis(spreading(S)) - S).max() < 1e-12


@settings(max_examples=30, deadline=None)
@given(odd_orders, seeds)
def test_weyl_bijective(L, seed):
    S = seeded_random("operator", seed, (L, L))
    assert np.abs(weyl_quantize(weyl_symbol(S)) - S).max() < 1e-12
    F = fourier_wigner(S)
    assert np.abs(symplectic_dft(symplectic_dft(F)) - F).max() < 1e-12
