# -*- coding: utf-8 -*-
"""
Two-qubit spin models
=====================

Hamiltonians of the anisotropic XXZ model and of the Heisenberg model with
Dzyaloshinski-Moriya (DM) interaction, in the standard basis
:math:`\\{|00\\rangle, |01\\rangle, |10\\rangle, |11\\rangle\\}`, together with their
closed-form spectra.
"""
from abc import abstractmethod
from collections import OrderedDict
from enum import Enum
from math import atan, hypot, sqrt
from typing import NamedTuple
from warnings import warn

import numpy as np

from .linalg import kron
from .meta import MetaModel, ModelParameter

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

# Energies closer than this are considered degenerate
DEGENERACY_TOL = 1e-12


class DegenerateModelWarning(UserWarning):
    """ Warning for models with a vanishing exchange constant J. """

    pass


def vector3(value):
    """ Cast ``value`` to a 3-tuple of floats. """
    vector = tuple(float(c) for c in value)
    if len(vector) != 3:
        raise ValueError(f"Expected 3 components, got {len(vector)}")
    return vector


class AbstractModel(metaclass=MetaModel):
    """
    Abstract base class for the parameters of a two-qubit spin model.

    Parameters are declared as :class:`ModelParameter` class attributes; they are
    collected in ``valid_parameters``. Concrete models are listed in the
    ``implementations`` class attribute, and identified by ``display_name``.

    Minimally, the following method must be implemented in subclasses:

        * hamiltonian
    """

    J = ModelParameter("J", float, default=1.0)  # exchange constant, units of temperature

    def __init__(self, **parameters):
        """
        Raises
        ------
        TypeError
            if a parameter is not valid for this model, or has an unexpected type.
        ValueError
            if a parameter is not finite.
        """
        for k, v in parameters.items():
            if k not in self.valid_parameters:
                raise TypeError(
                    f"{type(self).__name__} has no parameter {k}; valid parameters are {sorted(self.valid_parameters)}"
                )
            setattr(self, k, v)

        if self.J == 0:
            warn(
                f"{self!r} has J = 0; its Hamiltonian vanishes.",
                category=DegenerateModelWarning,
                stacklevel=3,
            )

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{type(self).__name__}({params})"

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.parameters == other.parameters

    def __hash__(self):
        return hash((type(self), tuple(self.parameters.items())))

    @property
    def parameters(self):
        """ Model parameters as a dictionary. """
        params = {k: getattr(self, k) for k in self.valid_parameters}
        return OrderedDict(sorted(params.items(), key=lambda t: t[0]))

    @property
    def degenerate(self):
        """ Whether the exchange constant vanishes. """
        return self.J == 0

    @abstractmethod
    def hamiltonian(self):
        """
        Hamiltonian in the standard basis.

        Returns
        -------
        H : `~numpy.ndarray`, shape (4, 4)
        """
        pass


class XXZParams(AbstractModel):
    """ Anisotropic XXZ model. ``J > 0`` is antiferromagnetic, ``J < 0`` ferromagnetic. """

    display_name = "xxz"

    delta = ModelParameter("delta", float, default=0.0)  # dimensionless anisotropy

    def __init__(self, J=1.0, delta=0.0):
        super().__init__(J=J, delta=delta)

    def hamiltonian(self):
        return build_xxz(self)

    def closed_spectrum(self):
        return closed_spectrum_xxz(self)


class DMParams(AbstractModel):
    """ XY model with a DM interaction along z, :math:`\\vec{D} = D \\hat{z}`. """

    display_name = "dm"

    D = ModelParameter("D", float, default=0.0)  # dimensionless DM coupling

    def __init__(self, J=1.0, D=0.0):
        super().__init__(J=J, D=D)

    @property
    def theta(self):
        """ Phase :math:`\\theta = \\arctan D` of the entangled eigenstates. """
        return atan(self.D)

    @property
    def gap(self):
        """ :math:`J \\sqrt{1 + D^2}` """
        return self.J * hypot(1, self.D)

    def hamiltonian(self):
        return build_dm(self)

    def closed_spectrum(self):
        return closed_spectrum_dm(self)


class GeneralHeisenbergDMParams(AbstractModel):
    """ XXZ model with a DM vector of arbitrary direction. No closed forms are available. """

    display_name = "general"

    delta = ModelParameter("delta", float, default=0.0)
    Dvec = ModelParameter("Dvec", vector3, default=(0.0, 0.0, 0.0))

    def __init__(self, J=1.0, delta=0.0, Dvec=(0.0, 0.0, 0.0)):
        super().__init__(J=J, delta=delta, Dvec=Dvec)

    def hamiltonian(self):
        return build_general(self)


def model_class(name):
    """
    Concrete model class registered under ``name``.

    Raises
    ------
    ValueError
        if no model is registered under this name.
    """
    # For easier debugging, models are checked in deterministic order
    for cls in sorted(AbstractModel.implementations, key=str):
        if cls.display_name == name:
            return cls
    raise ValueError(f"Unknown model {name}")


def model_names():
    """ Names of the concrete models, in alphabetical order. """
    return tuple(sorted(cls.display_name for cls in AbstractModel.implementations))


def build_xxz(p):
    """
    XXZ Hamiltonian :math:`\\frac{J}{2}(\\sigma_{1x}\\sigma_{2x} + \\sigma_{1y}\\sigma_{2y} + \\Delta\\sigma_{1z}\\sigma_{2z})`.

    Parameters
    ----------
    p : XXZParams

    Returns
    -------
    H : `~numpy.ndarray`, shape (4, 4)
        Real symmetric matrix.
    """
    J, delta = p.J, p.delta
    H = np.zeros((4, 4), dtype=complex)
    H[0, 0] = H[3, 3] = J * delta / 2
    H[1, 1] = H[2, 2] = -J * delta / 2
    H[1, 2] = H[2, 1] = J
    return H


def build_dm(p):
    """
    DM Hamiltonian :math:`J[(1 + iD)\\sigma_{1+}\\sigma_{2-} + (1 - iD)\\sigma_{1-}\\sigma_{2+}]`.

    Parameters
    ----------
    p : DMParams

    Returns
    -------
    H : `~numpy.ndarray`, shape (4, 4)
        Hermitian matrix whose only non-zero entries couple :math:`|01\\rangle` and :math:`|10\\rangle`.
    """
    H = np.zeros((4, 4), dtype=complex)
    H[1, 2] = p.J * complex(1, p.D)
    H[2, 1] = p.J * complex(1, -p.D)
    return H


def build_general(p):
    """
    Heisenberg Hamiltonian with a DM vector of arbitrary direction, built from Pauli
    strings:

    .. math::

        \\frac{J}{2}\\left[\\sigma_{1x}\\sigma_{2x} + \\sigma_{1y}\\sigma_{2y} + \\Delta\\sigma_{1z}\\sigma_{2z}
        + \\vec{D}\\cdot(\\vec{\\sigma}_1 \\times \\vec{\\sigma}_2)\\right]

    Parameters
    ----------
    p : GeneralHeisenbergDMParams

    Returns
    -------
    H : `~numpy.ndarray`, shape (4, 4)
    """
    sx, sy, sz = PAULI
    H = kron(sx, sx) + kron(sy, sy) + p.delta * kron(sz, sz)

    # (sigma_1 x sigma_2)_a = eps_abc sigma_1b sigma_2c
    for a, Da in enumerate(p.Dvec):
        if Da == 0:
            continue
        b, c = (a + 1) % 3, (a + 2) % 3
        H = H + Da * (kron(PAULI[b], PAULI[c]) - kron(PAULI[c], PAULI[b]))

    return (p.J / 2) * H


class StateLabel(Enum):
    """ Eigenstates of the two-qubit models. """

    Ket00 = "|00>"
    Ket11 = "|11>"
    PsiPlus = "|Psi+>"
    PsiMinus = "|Psi->"
    ChiralPlus = "|+>"
    ChiralMinus = "|->"


class Level(NamedTuple):
    energy: float
    eigenvector: np.ndarray
    label: StateLabel


class Spectrum:
    """
    Closed-form spectrum of a two-qubit model: energy levels, eigenvectors and labels.

    Parameters
    ----------
    levels : iterable of Level
    theta : float, optional
        Phase of the entangled eigenvectors, if any.
    """

    def __init__(self, levels, theta=0.0):
        self.levels = tuple(levels)
        self.theta = theta

    def __repr__(self):
        rep = f"< {type(self).__name__} with levels: "
        for level in self.levels:
            rep += f"\n    {level.label.value}: {level.energy}"
        return rep + " >"

    def __iter__(self):
        return iter(self.levels)

    def __len__(self):
        return len(self.levels)

    @property
    def energies(self):
        """ Energies in ascending order. """
        return np.sort([level.energy for level in self.levels])

    @property
    def eigenvectors(self):
        """ Eigenvectors as the columns of a matrix, in the order of ``levels``. """
        return np.column_stack([level.eigenvector for level in self.levels])

    def ground_levels(self, tol=DEGENERACY_TOL):
        """ Levels of the (possibly degenerate) ground manifold. """
        ground = min(level.energy for level in self.levels)
        return tuple(level for level in self.levels if level.energy - ground <= tol)

    @property
    def ground_labels(self):
        return frozenset(level.label for level in self.ground_levels())

    def level(self, label):
        """ Level associated with ``label``. """
        for level in self.levels:
            if level.label is label:
                return level
        raise KeyError(f"No level labeled {label}")


def _ket(*amplitudes):
    return np.array(amplitudes, dtype=complex)


def closed_spectrum_xxz(p):
    """
    Closed-form spectrum of the XXZ model: :math:`J\\Delta/2` for :math:`|00\\rangle` and
    :math:`|11\\rangle`, and :math:`-J\\Delta/2 \\pm J` for :math:`|\\Psi^\\pm\\rangle = (|01\\rangle \\pm |10\\rangle)/\\sqrt{2}`.

    Parameters
    ----------
    p : XXZParams

    Returns
    -------
    spectrum : Spectrum
    """
    J, delta = p.J, p.delta
    r = 1 / sqrt(2)
    return Spectrum(
        [
            Level(J * delta / 2, _ket(1, 0, 0, 0), StateLabel.Ket00),
            Level(J * delta / 2, _ket(0, 0, 0, 1), StateLabel.Ket11),
            Level(-J * delta / 2 + J, _ket(0, r, r, 0), StateLabel.PsiPlus),
            Level(-J * delta / 2 - J, _ket(0, r, -r, 0), StateLabel.PsiMinus),
        ]
    )


def closed_spectrum_dm(p):
    """
    Closed-form spectrum of the DM model: :math:`0` for :math:`|00\\rangle` and :math:`|11\\rangle`,
    and :math:`\\pm J\\sqrt{1+D^2}` for the chiral states
    :math:`|\\pm\\rangle = (|01\\rangle \\pm e^{-i\\theta}|10\\rangle)/\\sqrt{2}`, :math:`\\theta = \\arctan D`.

    With :math:`\\sigma_y = [[0, -i], [i, 0]]` the coupling :math:`\\langle 01|H|10\\rangle = J(1 + iD)`
    carries the phase :math:`e^{i\\theta}`, hence the conjugate phase on :math:`|10\\rangle`.

    Parameters
    ----------
    p : DMParams

    Returns
    -------
    spectrum : Spectrum
    """
    r = 1 / sqrt(2)
    phase = np.exp(-1j * p.theta)
    return Spectrum(
        [
            Level(0.0, _ket(1, 0, 0, 0), StateLabel.Ket00),
            Level(0.0, _ket(0, 0, 0, 1), StateLabel.Ket11),
            Level(p.gap, _ket(0, r, r * phase, 0), StateLabel.ChiralPlus),
            Level(-p.gap, _ket(0, r, -r * phase, 0), StateLabel.ChiralMinus),
        ],
        theta=p.theta,
    )
