import numpy as np
import pytest

from qtfa.constants import kappa
from qtfa.errors import EvenOrderUnsupported, ModelMismatch
from qtfa.operators import (
    as_operator,
    conv_fn_op,
    conv_op_op,
    feichtinger_atom,
    fourier_wigner,
    hs_norm,
    inverse_fourier_wigner,
    mod_space_norm,
    modulate_op,
    op_norm,
    parity_translate,
    rank_one,
    reflect_op,
    reflected_symbol,
    spreading,
    spreading_synthesis,
    symbol_convolution,
    trace_norm,
    translate_op,
    weyl_pairing,
    weyl_quantize,
    weyl_quantize_via_parity,
    weyl_symbol,
)
from qtfa.phase_space import root_of_unity
from qtfa.transforms import (
    grid_convolve,
    inner,
    parity,
    parity_matrix,
    stft,
    symplectic_dft,
    symplectic_modulate,
    tf_shift_matrix,
    translate,
)
from qtfa.testkit.oracle import naive_spreading

from conftest import close, rand_op, rand_signal


def test_as_operator_shape():
    with pytest.raises(ModelMismatch):
        as_operator(np.ones((2, 3)))
    with pytest.raises(ModelMismatch):
        as_operator(np.eye(3), 4)


def test_rank_one_action():
    u, v, w = rand_signal(0, 4), rand_signal(1, 4), rand_signal(2, 4)
    assert close(rank_one(u, v) @ w, inner(w, v) * u, 1e-14)


def test_norm_ordering():
    S = rand_op(0, 5)
    assert op_norm(S) <= hs_norm(S) <= trace_norm(S)


@pytest.mark.parametrize("L", [3, 4, 6])
def test_spreading_round_trip_and_oracle(L):
    S = rand_op(L, L)
    eta = spreading(S)
    assert close(eta, naive_spreading(S), 1e-13)
    assert close(spreading_synthesis(eta), S, 1e-13)
    direct = sum(eta[m, n] * tf_shift_matrix((m, n), L) for m in range(L) for n in range(L))
    assert close(direct, S, 1e-12)


def test_spreading_plancherel():
    L = 6
    S = rand_op(3, L)
    assert abs(hs_norm(S) ** 2 - L * (np.abs(spreading(S)) ** 2).sum()) < 1e-11


@pytest.mark.parametrize("L", [3, 5, 7])
def test_reference_symbols(L):
    P = parity_matrix(L)
    delta0 = np.zeros((L, L))
    delta0[0, 0] = 1
    assert close(weyl_symbol(P), delta0, 1e-13)
    assert close(fourier_wigner(P), np.full((L, L), 1 / L), 1e-13)
    assert close(weyl_symbol(np.eye(L)), np.full((L, L), 1 / L), 1e-13)


@pytest.mark.parametrize("L", [3, 5])
def test_weyl_round_trips(L):
    S = rand_op(10 + L, L)
    assert close(weyl_quantize(weyl_symbol(S)), S, 1e-12)
    assert close(inverse_fourier_wigner(fourier_wigner(S)), S, 1e-12)
    assert close(symplectic_dft(weyl_symbol(S)), fourier_wigner(S), 1e-12)


@pytest.mark.parametrize("L", [3, 5])
def test_weyl_quantize_via_parity(L):
    sigma = np.random.default_rng(L).standard_normal((L, L)) + 0j
    assert close(weyl_quantize_via_parity(sigma), weyl_quantize(sigma), 1e-12)


def test_weyl_pairing():
    L = 5
    S, f, g = rand_op(1, L), rand_signal(2, L), rand_signal(3, L)
    assert abs(weyl_pairing(S, f, g) - inner(S @ f, g)) < 1e-12


@pytest.mark.parametrize("L", [3, 5])
def test_covariances(L):
    S = rand_op(20, L)
    sigma = weyl_symbol(S)
    for z in [(1, 0), (0, 1), (1, 2), (L - 1, 2)]:
        assert close(weyl_symbol(translate_op(z, S)), translate(sigma, z), 1e-12)
        assert close(weyl_symbol(modulate_op(z, S)), symplectic_modulate(sigma, z), 1e-12)
        assert close(fourier_wigner(modulate_op(z, S)), translate(fourier_wigner(S), z), 1e-12)


def test_translate_op_is_conjugation():
    L = 6
    S = rand_op(4, L)
    U = tf_shift_matrix((2, 3), L)
    assert close(translate_op((2, 3), S), U @ S @ U.conj().T, 1e-13)


def test_modulate_needs_odd():
    with pytest.raises(EvenOrderUnsupported):
        modulate_op((1, 1), np.eye(4))


@pytest.mark.parametrize("L", [3, 5])
def test_parity_identities(L):
    P = parity_matrix(L)
    for m in range(L):
        for n in range(L):
            U = tf_shift_matrix((m, n), L)
            assert close(P @ U, tf_shift_matrix((-m, -n), L) @ P, 1e-14)
            phase = root_of_unity(-2 * m * n, L)
            assert close(parity_translate((m, n), L), phase * tf_shift_matrix((2 * m, 2 * n), L) @ P, 1e-13)


def test_parity_is_modulation_invariant():
    L = 5
    P = parity_matrix(L)
    for w in [(1, 0), (0, 1), (2, 3)]:
        assert close(modulate_op(w, P), P, 1e-13)


def test_reflection():
    L = 5
    S = rand_op(7, L)
    P = parity_matrix(L)
    assert close(reflect_op(S), P @ S @ P, 0)
    assert close(weyl_symbol(reflect_op(S)), reflected_symbol(S), 1e-13)


@pytest.mark.parametrize("L", [3, 5])
def test_operator_convolution(L):
    S, T = rand_op(30, L), rand_op(31, L)
    C = conv_op_op(S, T)
    X = reflect_op(T)
    for z in [(0, 0), (1, 2)]:
        assert abs(C[z] - np.trace(S @ translate_op(z, X))) < 1e-12
    assert close(C, symbol_convolution(S, T), 1e-12)
    assert close(symplectic_dft(C), kappa("fourier_wigner_convolution", L) * fourier_wigner(S) * fourier_wigner(T), 1e-12)
    assert kappa("op_convolution", L) == L


def test_rank_one_convolution_is_spectrogram():
    L = 6
    f, g = rand_signal(40, L), rand_signal(41, L)
    C = conv_op_op(rank_one(f, f), rank_one(g, g))
    assert close(C, np.abs(stft(f, parity(g))) ** 2, 1e-12)
    d = np.zeros(L)
    d[0] = 1
    assert close(conv_op_op(rank_one(f, f), rank_one(d, d)), np.abs(stft(f, d)) ** 2, 1e-12)


@pytest.mark.parametrize("L", [3, 5])
def test_function_operator_convolution(L):
    f = np.random.default_rng(L).standard_normal((L, L)) + 0j
    S = rand_op(50, L)
    direct = sum(f[z] * translate_op(z, S) for z in np.ndindex(L, L))
    assert close(conv_fn_op(f, S), direct, 1e-12)
    assert close(weyl_symbol(conv_fn_op(f, S)), grid_convolve(f, weyl_symbol(S)), 1e-12)


def test_feichtinger_atom_and_mod_norm():
    L = 6
    phi = feichtinger_atom(L)
    assert abs(np.abs(stft(phi, phi)).sum() - 1) < 1e-12
    norm2 = float(np.vdot(phi, phi).real)
    assert abs(mod_space_norm(np.eye(L)) - norm2) < 1e-14
    S = rand_op(5, L)
    assert mod_space_norm(S) <= op_norm(S) * norm2 + 1e-14
