# -*- coding: utf-8 -*-
from qubitherm import AbstractModel, ModelParameter, kron
from qubitherm.models import IDENTITY, SIGMA_Z
import numpy as np


class TestModel(AbstractModel):
    """ Ising model in a longitudinal field, for testing model classes """

    # We don't want pytest to collect this class as a test
    # https://stackoverflow.com/a/63430765
    __test__ = False

    h = ModelParameter("h", float, default=0.0)

    def hamiltonian(self):
        field = kron(SIGMA_Z, IDENTITY) + kron(IDENTITY, SIGMA_Z)
        return (self.J / 2) * kron(SIGMA_Z, SIGMA_Z) + self.h * field


def random_hermitian(n):
    """ Random complex Hermitian matrix with entries of order 1 """
    m = np.random.uniform(-1, 1, size=(n, n)) + 1j * np.random.uniform(
        -1, 1, size=(n, n)
    )
    return (m + m.conj().T) / 2


def bell_state(index):
    """ Density matrix of one of the four Bell states """
    r = 1 / np.sqrt(2)
    kets = [
        [r, 0, 0, r],  # Phi+
        [r, 0, 0, -r],  # Phi-
        [0, r, r, 0],  # Psi+
        [0, r, -r, 0],  # Psi-
    ]
    ket = np.array(kets[index], dtype=complex)
    return np.outer(ket, ket.conj())
