import numpy as np
import pytest

from qtfa.errors import EvenOrderUnsupported, ModelMismatch, PreconditionError
from qtfa.operators import fourier_wigner, spreading, weyl_symbol
from qtfa.phase_space import FiniteLattice, chirp
from qtfa.transforms import (
    ambiguity,
    as_signal,
    cross_wigner,
    delta,
    grid_convolve,
    inner,
    lp_norm,
    moyal_pair,
    parity,
    parity_matrix,
    periodize,
    poisson_series,
    reconstruct,
    reflect,
    stft,
    symplectic_dft,
    symplectic_modulate,
    tf_shift,
    tf_shift_matrix,
    translate,
    wigner_by_doubling,
)
from qtfa.testkit.oracle import naive_stft, naive_symplectic_dft, naive_tf_shift

from conftest import close, divisor_lattices, rand_signal


@pytest.mark.parametrize("L", [3, 4, 6])
def test_tf_shift_matches_definition(L):
    for m in range(L):
        for n in range(L):
            assert close(tf_shift_matrix((m, n), L), naive_tf_shift(m, n, L), 1e-14)


def test_tf_shift_unitary_and_action():
    L = 6
    f = rand_signal(0, L)
    U = tf_shift_matrix((2, 5), L)
    assert close(U @ U.conj().T, np.eye(L), 1e-14)
    assert close(tf_shift((2, 5), f), U @ f, 1e-14)


def test_delta_and_parity():
    L = 5
    assert close(parity(delta(2, L)), delta(3, L), 0)
    P = parity_matrix(L)
    assert close(P @ P, np.eye(L), 0)


def test_stft_matches_oracle():
    for L in (4, 5):
        f, g = rand_signal(1, L), rand_signal(2, L)
        assert close(stft(f, g), naive_stft(f, g), 1e-13)


def test_stft_order_mismatch():
    with pytest.raises(ModelMismatch):
        stft(np.ones(4), np.ones(5))


def test_as_signal_rejects_matrix():
    with pytest.raises(PreconditionError):
        as_signal(np.ones((3, 3)))


@pytest.mark.parametrize("L", [4, 5, 6])
def test_moyal(L):
    f1, g1, f2, g2 = (rand_signal(s, L) for s in range(4))
    lhs, rhs = moyal_pair(f1, g1, f2, g2)
    assert abs(lhs - L * rhs) < 1e-12
    V = stft(f1, g1)
    assert abs(lp_norm(V) ** 2 - L * abs(inner(f1, f1)) * abs(inner(g1, g1))) < 1e-12


def test_reconstruct():
    L = 6
    f, g, h = rand_signal(3, L), rand_signal(4, L), rand_signal(5, L)
    assert close(reconstruct(stft(f, g), g, h), f, 1e-12)


def test_symplectic_dft_involution_and_oracle():
    L = 5
    F = np.random.default_rng(0).standard_normal((L, L)) + 0j
    assert close(symplectic_dft(symplectic_dft(F)), F, 1e-13)
    assert close(symplectic_dft(F), naive_symplectic_dft(F), 1e-13)


def test_symplectic_modulation_intertwines_translation():
    L = 7
    F = np.random.default_rng(1).standard_normal((L, L)) + 0j
    for w in [(1, 0), (2, 3), (6, 6)]:
        assert close(symplectic_dft(translate(F, w)), symplectic_modulate(symplectic_dft(F), w), 1e-13)


def test_reflect_and_convolve():
    L = 4
    rng = np.random.default_rng(2)
    F, G = rng.standard_normal((L, L)), rng.standard_normal((L, L))
    C = grid_convolve(F, G)
    direct = sum(F[w] * translate(G, w) for w in np.ndindex(L, L))
    assert close(C, direct, 1e-12)
    assert close(reflect(reflect(F)), F, 0)


@pytest.mark.parametrize("L", [4, 6, 9])
def test_poisson_summation(L):
    F = np.random.default_rng(L).standard_normal((L, L)) + 0j
    for lat in divisor_lattices(L):
        assert close(poisson_series(F, lat), periodize(F, lat), 1e-11)


@pytest.mark.parametrize("L", [3, 5, 7])
def test_cross_wigner_two_routes(L):
    f, g = rand_signal(6, L), rand_signal(7, L)
    assert close(cross_wigner(f, g), wigner_by_doubling(f, g), 1e-12)


def test_wigner_marginal_sum():
    L = 5
    f, g = rand_signal(8, L), rand_signal(9, L)
    assert abs(cross_wigner(f, g).sum() - L * inner(f, g)) < 1e-12


def test_ambiguity_is_fourier_wigner_of_rank_one():
    L = 5
    f, g = rand_signal(10, L), rand_signal(11, L)
    R = np.outer(f, g.conj())
    # F_W(f x g)(z) = (1/L) w^{hmn} <f, pi(z) g>
    assert close(fourier_wigner(R), ambiguity(f, g) / L, 1e-13)
    assert close(weyl_symbol(R), cross_wigner(f, g) / L, 1e-13)


def test_chirp_relates_spreading_and_fourier_wigner():
    L = 3
    S = np.arange(9, dtype=complex).reshape(3, 3)
    assert close(fourier_wigner(S), chirp(L) * spreading(S), 1e-14)


def test_even_order_wigner():
    with pytest.raises(EvenOrderUnsupported):
        cross_wigner(np.ones(4), np.ones(4))


def test_periodize_counts():
    lat = FiniteLattice(4, 2, 2)
    F = np.zeros((4, 4), dtype=complex)
    F[0, 0] = 1
    assert close(periodize(F, lat), lat.mask().astype(complex), 0)
