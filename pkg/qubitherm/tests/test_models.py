# -*- coding: utf-8 -*-
from itertools import product

import numpy as np
from scipy.linalg import eigh

from qubitherm import (
    DegenerateModelWarning,
    DMParams,
    GeneralHeisenbergDMParams,
    StateLabel,
    XXZParams,
    build_dm,
    build_general,
    build_xxz,
    closed_spectrum_dm,
    closed_spectrum_xxz,
    model_class,
)
from qubitherm.linalg import hermitian_eigen, is_hermitian
import pytest

COUPLINGS = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0]
ANISOTROPIES = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0]


@pytest.mark.parametrize("J, delta", product(COUPLINGS, ANISOTROPIES))
def test_build_xxz_pauli_expansion(J, delta):
    """ Test that the explicit XXZ matrix matches its expansion in Pauli strings """
    p = XXZParams(J=J, delta=delta)
    general = GeneralHeisenbergDMParams(J=J, delta=delta, Dvec=(0, 0, 0))
    assert np.allclose(build_xxz(p), build_general(general), atol=1e-15)


@pytest.mark.parametrize("J, D", product(COUPLINGS, [-2.0, -1.0, 0.0, 1.0, 2.0]))
def test_build_dm_pauli_expansion(J, D):
    """ Test that the explicit DM matrix matches its expansion in Pauli strings """
    p = DMParams(J=J, D=D)
    general = GeneralHeisenbergDMParams(J=J, delta=0, Dvec=(0, 0, D))
    H = build_dm(p)
    assert np.allclose(H, build_general(general), atol=1e-15)
    assert H[1, 2] == J * complex(1, D)
    assert is_hermitian(H)


def test_build_general_hermitian():
    """ Test that the general Hamiltonian is Hermitian for any DM vector """
    p = GeneralHeisenbergDMParams(J=1.3, delta=0.7, Dvec=(0.2, -1.1, 0.5))
    assert is_hermitian(build_general(p), tol=1e-15)


def test_hamiltonian_methods():
    """ Test that parameter classes build their own Hamiltonian """
    p = XXZParams(J=1, delta=0.5)
    assert np.allclose(p.hamiltonian(), build_xxz(p))

    p = DMParams(J=1, D=0.5)
    assert np.allclose(p.hamiltonian(), build_dm(p))


@pytest.mark.parametrize("J, delta", product(COUPLINGS, ANISOTROPIES))
def test_closed_spectrum_xxz(J, delta):
    """ Test the closed-form XXZ spectrum against exact diagonalization """
    p = XXZParams(J=J, delta=delta)
    H = build_xxz(p)
    spectrum = closed_spectrum_xxz(p)

    assert np.allclose(spectrum.energies, eigh(H, eigvals_only=True), atol=1e-12)
    for level in spectrum:
        assert np.allclose(H @ level.eigenvector, level.energy * level.eigenvector)
        assert np.isclose(np.linalg.norm(level.eigenvector), 1)


@pytest.mark.parametrize("J, D", product(COUPLINGS, [-2.0, -0.5, 0.0, 1.0, 3.0]))
def test_closed_spectrum_dm(J, D):
    """ Test the closed-form DM spectrum and eigenvectors against the Hamiltonian """
    p = DMParams(J=J, D=D)
    H = build_dm(p)
    spectrum = closed_spectrum_dm(p)

    assert np.allclose(spectrum.energies, eigh(H, eigvals_only=True), atol=1e-12)
    assert np.isclose(spectrum.theta, np.arctan(D))
    for level in spectrum:
        assert np.allclose(H @ level.eigenvector, level.energy * level.eigenvector)

    V = spectrum.eigenvectors
    assert np.allclose(V.conj().T @ V, np.eye(4))


def test_closed_spectrum_methods():
    """ Test that parameter classes provide their closed-form spectrum """
    assert len(XXZParams(J=1, delta=2).closed_spectrum()) == 4
    assert len(DMParams(J=1, D=2).closed_spectrum()) == 4


@pytest.mark.parametrize(
    "J, delta, ground",
    [
        (1, 0, {StateLabel.PsiMinus}),
        (1, 2, {StateLabel.PsiMinus}),
        (1, -1, {StateLabel.Ket00, StateLabel.Ket11, StateLabel.PsiMinus}),
        (1, -2, {StateLabel.Ket00, StateLabel.Ket11}),
        (-1, 0, {StateLabel.PsiPlus}),
        (-1, 1, {StateLabel.Ket00, StateLabel.Ket11, StateLabel.PsiPlus}),
        (-1, 2, {StateLabel.Ket00, StateLabel.Ket11}),
    ],
)
def test_xxz_ground_state(J, delta, ground):
    """ Test the ground manifold of the XXZ model across the anisotropy domains """
    assert closed_spectrum_xxz(XXZParams(J=J, delta=delta)).ground_labels == ground


def test_dm_ground_state():
    """ Test that the ground state of the DM model is one of the chiral states """
    assert closed_spectrum_dm(DMParams(J=1, D=1)).ground_labels == {StateLabel.ChiralMinus}
    assert closed_spectrum_dm(DMParams(J=-1, D=1)).ground_labels == {StateLabel.ChiralPlus}


def test_spectrum_level():
    """ Test that levels are retrieved by label """
    spectrum = closed_spectrum_xxz(XXZParams(J=1, delta=0))
    assert spectrum.level(StateLabel.PsiMinus).energy == -1

    with pytest.raises(KeyError):
        spectrum.level(StateLabel.ChiralPlus)


def test_isotropic_degeneracy():
    """ Test the triplet degeneracy of the isotropic antiferromagnet """
    spectrum = closed_spectrum_xxz(XXZParams(J=1, delta=1))
    assert np.allclose(spectrum.energies, [-1.5, 0.5, 0.5, 0.5])


def test_degenerate_model_warning():
    """ Test that a vanishing exchange constant raises a warning """
    with pytest.warns(DegenerateModelWarning):
        p = XXZParams(J=0, delta=1)
    assert p.degenerate
    assert np.allclose(build_xxz(p), 0)
    assert not XXZParams(J=1).degenerate


def test_model_equality():
    """ Test equality, hashing and representation of parameter objects """
    assert XXZParams(J=1, delta=0.5) == XXZParams(J=1.0, delta=0.5)
    assert XXZParams(J=1, delta=0.5) != XXZParams(J=1, delta=0.6)
    assert XXZParams(J=1, delta=0) != DMParams(J=1, D=0)
    assert len({XXZParams(J=1), XXZParams(J=1), DMParams(J=1)}) == 2
    assert repr(XXZParams(J=1, delta=0.5)) == "XXZParams(J=1.0, delta=0.5)"


def test_model_parameter_types():
    """ Test that parameters are cast and validated """
    with pytest.raises(TypeError):
        XXZParams(J="one")

    with pytest.raises(ValueError):
        DMParams(D=np.inf)

    with pytest.raises(TypeError):
        GeneralHeisenbergDMParams(Dvec=(1, 2))

    p = GeneralHeisenbergDMParams(Dvec=[1, 2, 3])
    assert p.Dvec == (1.0, 2.0, 3.0)


def test_model_class():
    """ Test that models are found by display name """
    assert model_class("xxz") is XXZParams
    assert model_class("dm") is DMParams
    assert model_class("general") is GeneralHeisenbergDMParams

    with pytest.raises(ValueError):
        model_class("ising")


@pytest.mark.parametrize(
    "J, delta", product([-2.0, -1.0, 1.0, 2.0], [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0])
)
def test_jacobi_spectrum_xxz(J, delta):
    """ Test that the Jacobi eigensolver reproduces the closed-form XXZ spectrum """
    p = XXZParams(J=J, delta=delta)
    eigenvalues = hermitian_eigen(build_xxz(p)).eigenvalues
    assert np.max(np.abs(eigenvalues - closed_spectrum_xxz(p).energies)) < 1e-12


@pytest.mark.parametrize("J, D", product([-1.0, 1.0], [-3.0, -1.0, 0.0, 1.0, 3.0]))
def test_jacobi_spectrum_dm(J, D):
    """ Test that the Jacobi eigensolver reproduces the closed-form DM spectrum """
    p = DMParams(J=J, D=D)
    eigenvalues = hermitian_eigen(build_dm(p)).eigenvalues
    assert np.max(np.abs(eigenvalues - closed_spectrum_dm(p).energies)) < 1e-12


@pytest.mark.parametrize(
    "p",
    [
        XXZParams(J=2, delta=-1.5),
        DMParams(J=-1, D=3),
        GeneralHeisenbergDMParams(J=1.3, delta=0.7, Dvec=(0.2, -1.1, 0.5)),
    ],
)
def test_hamiltonian_traceless(p):
    """ Test that Hamiltonians are traceless """
    assert abs(np.trace(p.hamiltonian())) < 1e-15


def test_general_dm_vector_along_x():
    """ Test that a DM vector along x couples |00> to the |01>, |10> sector """
    H = build_general(GeneralHeisenbergDMParams(J=1, delta=0, Dvec=(1, 0, 0)))
    assert is_hermitian(H, tol=1e-15)
    assert np.isclose(H[0, 1], 0.5j)
    assert np.isclose(H[0, 2], -0.5j)
    assert np.isclose(H[3, 1], -0.5j)
    assert np.isclose(H[3, 2], 0.5j)
    assert H[0, 3] == 0

    decomp = hermitian_eigen(H)
    assert np.allclose(decomp.reconstruct(), H, atol=1e-12)
