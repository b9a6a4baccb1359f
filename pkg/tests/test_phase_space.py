from fractions import Fraction

import numpy as np
import pytest

from qtfa.errors import EvenOrderUnsupported, NonDivisor, PreconditionError, Unhalvable
from qtfa.phase_space import (
    FiniteLattice,
    as_point,
    chirp,
    cocycle,
    coefficient_twist,
    covolume,
    half_lattice,
    make_lattice,
    root_of_unity,
    symplectic_character,
    symplectic_form,
)
from qtfa.transforms import tf_shift_matrix

from conftest import divisor_lattices


def test_lattice_basics():
    lat = make_lattice(12, 3, 4)
    assert lat.count == 12
    assert lat.adjoint() == FiniteLattice(12, 3, 4)
    assert covolume(lat) == Fraction(1)
    lat = make_lattice(12, 2, 3)
    assert lat.adjoint() == FiniteLattice(12, 4, 6)
    assert lat.covolume() * lat.adjoint().covolume() == 1


@pytest.mark.parametrize("L,a,b", [(4, 3, 1), (6, 4, 1), (5, 1, 2)])
def test_non_divisor(L, a, b):
    with pytest.raises(NonDivisor):
        make_lattice(L, a, b)


def test_bad_sizes():
    with pytest.raises(PreconditionError):
        FiniteLattice(1, 1, 1)
    with pytest.raises(PreconditionError):
        FiniteLattice(4, 0, 1)


@pytest.mark.parametrize("L", [4, 6, 9])
def test_adjoint_commutes(L):
    for lat in divisor_lattices(L):
        adj = lat.adjoint()
        assert adj.adjoint() == lat
        for z in lat.generators():
            for w in adj.generators():
                U, V = tf_shift_matrix(z, L), tf_shift_matrix(w, L)
                assert np.allclose(U @ V, V @ U)
                assert symplectic_form(z, w) % L == 0


def test_points_and_mask():
    lat = FiniteLattice(6, 2, 3)
    assert len(lat.points) == lat.count == 6
    assert lat.mask().sum() == 6
    assert lat.contains((4, 3)) and not lat.contains((1, 0))
    assert lat.contains((-2, 9))


def test_symplectic_form_antisymmetric():
    assert symplectic_form((1, 2), (3, 5)) == 3 * 2 - 1 * 5
    assert symplectic_form((1, 2), (3, 5)) == -symplectic_form((3, 5), (1, 2))
    assert symplectic_form((4, 7), (4, 7)) == 0


@pytest.mark.parametrize("L", [3, 5])
def test_cocycle_matches_composition(L):
    for z in [(1, 2), (0, 1), (2, 2)]:
        for w in [(1, 1), (2, 0)]:
            c = cocycle("heisenberg", z, w, L)
            zw = (z[0] + w[0], z[1] + w[1])
            assert np.allclose(tf_shift_matrix(z, L) @ tf_shift_matrix(w, L), c * tf_shift_matrix(zw, L))
            s = cocycle("symmetric", z, w, L)
            assert abs(abs(s) - 1) < 1e-15


def test_symmetric_cocycle_needs_odd():
    with pytest.raises(EvenOrderUnsupported):
        cocycle("symmetric", (1, 1), (1, 0), 4)


def test_root_of_unity_exact():
    assert root_of_unity(7, 7) == 1
    assert root_of_unity(0, 5) == 1
    assert abs(root_of_unity(1, 4) - 1j) < 1e-15


def test_half_lattice():
    assert half_lattice(FiniteLattice(9, 3, 3)) == FiniteLattice(9, 3, 3)
    assert half_lattice(FiniteLattice(8, 2, 4)) == FiniteLattice(8, 1, 2)
    for bad in [(8, 1, 4), (8, 2, 1)]:
        with pytest.raises(Unhalvable):
            half_lattice(FiniteLattice(*bad))


def test_half_lattice_doubles_into_lattice():
    lat = FiniteLattice(12, 4, 2)
    half = half_lattice(lat)
    for m, n in half.points:
        assert lat.contains((2 * m, 2 * n))


def test_chirp_odd_only():
    c = chirp(5)
    assert c.shape == (5, 5) and np.allclose(np.abs(c), 1)
    # chirp squared is w^{mn}
    m = np.arange(5)
    assert np.allclose(c**2, root_of_unity(np.outer(m, m), 5))
    with pytest.raises(EvenOrderUnsupported):
        chirp(4)


def test_character_and_twist():
    L = 5
    ch = symplectic_character((1, 2), L)
    assert abs(ch[3, 4] - root_of_unity(symplectic_form((3, 4), (1, 2)), L)) < 1e-14
    tw = coefficient_twist(FiniteLattice(4, 2, 2))
    assert set(np.round(tw.real).astype(int)) <= {1, -1}


def test_as_point():
    assert as_point((7, -1), 5) == (2, 4)
    with pytest.raises(PreconditionError):
        as_point((1, 2, 3))
