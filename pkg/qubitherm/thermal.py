# -*- coding: utf-8 -*-
"""
Thermal states
==============

Gibbs states :math:`\\rho(T) = \\exp(-H/T)/Z` of two-qubit Hamiltonians, with the
Boltzmann constant set to 1 so that temperatures share the units of :math:`J`.
"""
import logging
from math import cos, cosh, exp, isfinite, sin, sinh

import numpy as np

from .linalg import (
    EXPONENT_GUARD,
    as_matrix,
    hermitian_eigen,
    hermiticity_error,
)
from .meta import QubithermError

logger = logging.getLogger(__name__)

# Tolerance on the invariants of a density matrix (Hermiticity, trace, positivity)
DENSITY_TOL = 1e-12


class TemperatureOutOfRange(QubithermError, ValueError):
    """ Raised for non-positive temperatures, or temperatures so low that Boltzmann factors overflow. """

    pass


class InvalidDensityMatrix(QubithermError, ValueError):
    """ Raised when a matrix is not a valid two-qubit density matrix. """

    pass


class Temperature(float):
    """
    Strictly positive, finite temperature in units of :math:`J` (:math:`k = 1`).

    Raises
    ------
    TemperatureOutOfRange
        if the value is not strictly positive and finite.
    """

    def __new__(cls, value):
        value = float(value)
        if not (isfinite(value) and value > 0):
            raise TemperatureOutOfRange(
                f"Temperatures must be positive and finite, got {value}"
            )
        return super().__new__(cls, value)

    @property
    def value(self):
        return float(self)


def validate_density_matrix(rho, tol=DENSITY_TOL):
    """
    Check that ``rho`` is a 4 x 4 density matrix: Hermitian, unit trace and positive
    semi-definite, all within ``tol``.

    Returns
    -------
    rho : `~numpy.ndarray`, shape (4, 4)

    Raises
    ------
    InvalidDensityMatrix
        if any of the conditions above is violated.
    """
    try:
        rho = as_matrix(rho)
    except ValueError as e:
        raise InvalidDensityMatrix(str(e))

    if rho.shape != (4, 4):
        raise InvalidDensityMatrix(f"Expected a 4x4 density matrix, got {rho.shape}")

    error = hermiticity_error(rho)
    if error > tol:
        raise InvalidDensityMatrix(f"Density matrix is not Hermitian ({error:.3e})")

    trace = np.trace(rho)
    if abs(trace - 1) > tol:
        raise InvalidDensityMatrix(f"Density matrix has trace {trace}")

    smallest = hermitian_eigen(rho).eigenvalues[0]
    if smallest < -tol:
        raise InvalidDensityMatrix(
            f"Density matrix has a negative eigenvalue {smallest:.3e}"
        )
    return rho


class ThermalState:
    """
    Validated Gibbs state of a two-qubit model.

    Parameters
    ----------
    rho : array_like, shape (4, 4)
        Density matrix.
    temperature : float or Temperature
    model_tag : str, optional
        Description of the model that produced this state.
    partition_function : float or None, optional
        Partition function :math:`Z`, if known.

    Raises
    ------
    InvalidDensityMatrix
        if ``rho`` is not a valid density matrix.
    """

    def __init__(self, rho, temperature, model_tag="", partition_function=None):
        self.rho = validate_density_matrix(rho)
        self.temperature = Temperature(temperature)
        self.model_tag = model_tag
        self.partition_function = partition_function

    def __repr__(self):
        return f"< {type(self).__name__} of {self.model_tag or 'unknown model'} at T = {self.temperature} >"

    def __array__(self, dtype=None):
        return np.asarray(self.rho, dtype=dtype)

    def populations(self):
        """ Eigenvalues of the density matrix, in ascending order. """
        return hermitian_eigen(self.rho).eigenvalues


def _check_exponent(energy_scale, t):
    if energy_scale / t > EXPONENT_GUARD:
        raise TemperatureOutOfRange(
            f"Temperature {t} is too low for energy scale {energy_scale}: "
            f"Boltzmann exponents exceed {EXPONENT_GUARD}"
        )


def gibbs_state(h, t, model_tag=""):
    """
    Thermal state :math:`\\rho(T) = \\exp(-H/T)/Z` of a Hamiltonian.

    Boltzmann weights are computed relative to the ground energy,
    :math:`e^{-(E_i - E_0)/T}`, before normalization.

    Parameters
    ----------
    h : array_like, shape (4, 4)
        Hermitian Hamiltonian.
    t : float or Temperature
        Temperature, strictly positive.
    model_tag : str, optional
        Description of the model, recorded in the thermal state.

    Returns
    -------
    state : ThermalState

    Raises
    ------
    TemperatureOutOfRange
        if ``t`` is not positive, or if :math:`\\max|E_i|/T > 700`.
    NotHermitian
        if ``h`` is not Hermitian.
    """
    t = Temperature(t)
    decomp = hermitian_eigen(h)
    energies = decomp.eigenvalues
    _check_exponent(np.max(np.abs(energies)), t)

    ground = energies[0]
    weights = np.exp(-(energies - ground) / t)
    norm = np.sum(weights)
    rho = decomp.apply(lambda _: weights / norm)

    logger.debug(f"Gibbs state of {model_tag or 'Hamiltonian'} at T = {t}")
    return ThermalState(
        rho, t, model_tag=model_tag, partition_function=norm * exp(-ground / t)
    )


def closed_rho_xxz(p, t):
    """
    Closed-form thermal state of the XXZ model. In the standard basis,

    .. math::

        \\rho(T) = \\frac{1}{2(e^{J\\Delta/2T}\\cosh(J/T) + e^{-J\\Delta/2T})}
        \\begin{pmatrix}
            e^{-J\\Delta/2T} & 0 & 0 & 0 \\\\
            0 & e^{J\\Delta/2T}\\cosh(J/T) & -e^{J\\Delta/2T}\\sinh(J/T) & 0 \\\\
            0 & -e^{J\\Delta/2T}\\sinh(J/T) & e^{J\\Delta/2T}\\cosh(J/T) & 0 \\\\
            0 & 0 & 0 & e^{-J\\Delta/2T}
        \\end{pmatrix}

    Parameters
    ----------
    p : XXZParams
    t : float or Temperature

    Returns
    -------
    state : ThermalState

    Raises
    ------
    TemperatureOutOfRange
        if ``t`` is not positive, or if Boltzmann exponents exceed 700.
    """
    t = Temperature(t)
    J, delta = p.J, p.delta
    _check_exponent(abs(J * delta) / 2 + abs(J), t)

    corner = exp(-J * delta / (2 * t))
    center = exp(J * delta / (2 * t))
    diag, offdiag = center * cosh(J / t), -center * sinh(J / t)
    Z = 2 * (diag + corner)

    rho = np.array(
        [
            [corner, 0, 0, 0],
            [0, diag, offdiag, 0],
            [0, offdiag, diag, 0],
            [0, 0, 0, corner],
        ],
        dtype=complex,
    )
    return ThermalState(rho / Z, t, model_tag=repr(p), partition_function=Z)


def closed_rho_dm(p, t, theta=None):
    """
    Closed-form thermal state of the DM model. In the standard basis, with
    :math:`x = J\\sqrt{1+D^2}/T`,

    .. math::

        \\rho(T) = \\frac{1}{2(\\cosh x + 1)}
        \\begin{pmatrix}
            1 & 0 & 0 & 0 \\\\
            0 & \\cosh x & -e^{i\\theta}\\sinh x & 0 \\\\
            0 & -e^{-i\\theta}\\sinh x & \\cosh x & 0 \\\\
            0 & 0 & 0 & 1
        \\end{pmatrix}

    The phase placement follows the coupling :math:`\\langle 01|H|10\\rangle = J(1 + iD)` of
    :func:`build_dm`.

    Parameters
    ----------
    p : DMParams
    t : float or Temperature
    theta : float or None, optional
        Override for the phase :math:`\\theta`. If None (default), :math:`\\theta = \\arctan D`.
        Other values do not describe a Gibbs state of the model, but have the same
        spin-flip spectrum.

    Returns
    -------
    state : ThermalState

    Raises
    ------
    TemperatureOutOfRange
        if ``t`` is not positive, or if Boltzmann exponents exceed 700.
    """
    t = Temperature(t)
    if theta is None:
        theta = p.theta
    _check_exponent(abs(p.gap), t)

    x = p.gap / t
    diag = cosh(x)
    phase = complex(cos(theta), sin(theta))
    Z = 2 * (diag + 1)

    rho = np.array(
        [
            [1, 0, 0, 0],
            [0, diag, -phase * sinh(x), 0],
            [0, -phase.conjugate() * sinh(x), diag, 0],
            [0, 0, 0, 1],
        ],
        dtype=complex,
    )
    return ThermalState(rho / Z, t, model_tag=repr(p), partition_function=Z)
