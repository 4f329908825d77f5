# -*- coding: utf-8 -*-
"""
Concurrence
===========

Wootters concurrence of two-qubit density matrices,

.. math::

    C = \\max(\\lambda_1 - \\lambda_2 - \\lambda_3 - \\lambda_4, 0),

where the :math:`\\lambda_i` are the square roots of the eigenvalues of
:math:`\\rho\\tilde{\\rho}`, in decreasing order, and :math:`\\tilde{\\rho}` is the
spin-flipped density matrix. Closed forms for the thermal states of the XXZ and
DM models are also provided.
"""
from math import exp, expm1, hypot
from typing import NamedTuple, Tuple

import numpy as np
from scipy.special import logsumexp

from .linalg import PSD_TOL, NotPSD, dagger, hermitian_eigen, kron, psd_sqrt
from .meta import QubithermError
from .models import SIGMA_Y, DMParams, XXZParams
from .thermal import (
    Temperature,
    gibbs_state,
    validate_density_matrix,
)

SPIN_FLIP = np.real(kron(SIGMA_Y, SIGMA_Y)).astype(complex)


class WrongSign(QubithermError, ValueError):
    """ Raised when a formula for one sign of the exchange constant is used with the other sign. """

    pass


class DegenerateModel(QubithermError, ValueError):
    """ Raised when a computation requires a non-vanishing exchange constant. """

    pass


class ConcurrenceResult(NamedTuple):
    """
    Square roots :math:`\\lambda_1 \\geq \\lambda_2 \\geq \\lambda_3 \\geq \\lambda_4` of the
    eigenvalues of :math:`\\rho\\tilde{\\rho}`, and the associated concurrence.
    """

    lambdas: Tuple[float, float, float, float]
    value: float

    @classmethod
    def from_lambdas(cls, lambdas):
        """ Sort ``lambdas`` in decreasing order and compute the concurrence. """
        lambdas = tuple(sorted((float(l) for l in lambdas), reverse=True))
        l1, l2, l3, l4 = lambdas
        # Upper bound only matters for rounding errors near pure states
        value = min(max(l1 - l2 - l3 - l4, 0.0), 1.0)
        return cls(lambdas=lambdas, value=value)


def spin_flip(rho):
    """
    Spin-flipped density matrix :math:`\\tilde{\\rho} = (\\sigma_y \\otimes \\sigma_y)\\rho^*(\\sigma_y \\otimes \\sigma_y)`.

    Parameters
    ----------
    rho : array_like, shape (4, 4)
        Two-qubit density matrix.

    Returns
    -------
    flipped : `~numpy.ndarray`, shape (4, 4)

    Raises
    ------
    InvalidDensityMatrix
        if ``rho`` is not a valid density matrix.
    """
    rho = validate_density_matrix(rho)
    return SPIN_FLIP @ np.conj(rho) @ SPIN_FLIP


def wootters_concurrence(rho):
    """
    Concurrence of an arbitrary two-qubit density matrix.

    The :math:`\\lambda_i` are the singular values of :math:`\\sqrt{\\rho}\\sqrt{\\tilde{\\rho}}`, since
    :math:`(\\sqrt{\\rho}\\sqrt{\\tilde{\\rho}})(\\sqrt{\\rho}\\sqrt{\\tilde{\\rho}})^\\dagger = \\sqrt{\\rho}\\tilde{\\rho}\\sqrt{\\rho}`
    is similar to :math:`\\rho\\tilde{\\rho}`. They are obtained as the non-negative eigenvalues of the
    Hermitian matrix

    .. math::

        \\begin{pmatrix} 0 & A \\\\ A^\\dagger & 0 \\end{pmatrix}, \\qquad A = \\sqrt{\\rho}\\sqrt{\\tilde{\\rho}},

    which keeps the small :math:`\\lambda_i` of nearly pure states accurate to machine precision,
    whereas square roots of the eigenvalues of :math:`\\sqrt{\\rho}\\tilde{\\rho}\\sqrt{\\rho}` are not.

    Parameters
    ----------
    rho : array_like, shape (4, 4)
        Two-qubit density matrix.

    Returns
    -------
    result : ConcurrenceResult

    Raises
    ------
    InvalidDensityMatrix
        if ``rho`` is not a valid density matrix.
    """
    rho = validate_density_matrix(rho)
    sqrt_rho = psd_sqrt(rho)
    # sqrt(rho~) follows from sqrt(rho) since the spin flip is a real unitary conjugation
    sqrt_flipped = SPIN_FLIP @ np.conj(sqrt_rho) @ SPIN_FLIP
    A = sqrt_rho @ sqrt_flipped

    dilation = np.zeros((8, 8), dtype=complex)
    dilation[:4, 4:] = A
    dilation[4:, :4] = dagger(A)

    # Eigenvalues of the dilation are +/- the singular values of A
    eigenvalues = hermitian_eigen(dilation).eigenvalues
    lambdas = eigenvalues[4:]
    if np.min(lambdas) < -PSD_TOL:
        raise NotPSD(f"Spin-flip spectrum has a negative value {np.min(lambdas):.3e}")
    return ConcurrenceResult.from_lambdas(np.clip(lambdas, 0, None))


def _from_log_weights(log_weights):
    """ Concurrence result from the logarithms of unnormalized lambdas. """
    log_weights = np.asarray(log_weights, dtype=float)
    return ConcurrenceResult.from_lambdas(np.exp(log_weights - logsumexp(log_weights)))


def closed_lambdas_xxz(p, t):
    """
    Closed-form :math:`\\lambda_i` of the XXZ thermal state,

    .. math::

        \\frac{e^{-J\\Delta/T}, \\quad e^{-J\\Delta/T}, \\quad e^{J/T}, \\quad e^{-J/T}}{2(\\cosh(J/T) + e^{-J\\Delta/T})},

    sorted in decreasing order. Normalization is carried out in log-space, so that low
    temperatures do not overflow.

    Parameters
    ----------
    p : XXZParams
    t : float or Temperature

    Returns
    -------
    result : ConcurrenceResult
    """
    t = Temperature(t)
    x, y = p.J / t, -p.J * p.delta / t
    return _from_log_weights([y, y, x, -x])


def closed_lambdas_dm(p, t):
    """
    Closed-form :math:`\\lambda_i` of the DM thermal state, with :math:`x = J\\sqrt{1+D^2}/T`,

    .. math::

        \\frac{1, \\quad 1, \\quad e^{x}, \\quad e^{-x}}{2(\\cosh x + 1)},

    sorted in decreasing order. They do not depend on the phase :math:`\\theta`.

    Parameters
    ----------
    p : DMParams
    t : float or Temperature

    Returns
    -------
    result : ConcurrenceResult
    """
    t = Temperature(t)
    x = p.gap / t
    return _from_log_weights([0.0, 0.0, x, -x])


def _branch(x, a):
    """
    :math:`\\max((\\sinh x - e^{-a x})/(\\cosh x + e^{-a x}), 0)` for :math:`x > 0`, :math:`a > -1`,
    rescaled by :math:`2e^{-x}` so that no exponent is positive.
    """
    small = 2 * exp(-(1 + a) * x)
    numerator = -expm1(-2 * x) - small
    denominator = 1 + exp(-2 * x) + small
    return max(numerator / denominator, 0.0)


def concurrence_xxz_afm(p, t):
    """
    Concurrence of the antiferromagnetic XXZ model (:math:`J > 0`),

    .. math::

        C = \\max\\left(\\frac{\\sinh(J/T) - e^{-J\\Delta/T}}{\\cosh(J/T) + e^{-J\\Delta/T}}, 0\\right),

    and :math:`C = 0` for :math:`\\Delta \\leq -1`.

    Parameters
    ----------
    p : XXZParams
    t : float or Temperature

    Returns
    -------
    C : float

    Raises
    ------
    WrongSign
        if :math:`J \\leq 0`.
    """
    t = Temperature(t)
    if p.J <= 0:
        raise WrongSign(f"The antiferromagnetic concurrence requires J > 0, got {p.J}")
    if p.delta <= -1:
        return 0.0
    return _branch(p.J / t, p.delta)


def concurrence_xxz_fm(p, t):
    """
    Concurrence of the ferromagnetic XXZ model (:math:`J < 0`),

    .. math::

        C = \\max\\left(\\frac{\\sinh(|J|/T) - e^{|J|\\Delta/T}}{\\cosh(|J|/T) + e^{|J|\\Delta/T}}, 0\\right),

    and :math:`C = 0` for :math:`\\Delta \\geq 1`.

    Parameters
    ----------
    p : XXZParams
    t : float or Temperature

    Returns
    -------
    C : float

    Raises
    ------
    WrongSign
        if :math:`J \\geq 0`.
    """
    t = Temperature(t)
    if p.J >= 0:
        raise WrongSign(f"The ferromagnetic concurrence requires J < 0, got {p.J}")
    if p.delta >= 1:
        return 0.0
    return _branch(abs(p.J) / t, -p.delta)


def concurrence_xxz(p, t):
    """
    Concurrence of the XXZ model, dispatched on the sign of :math:`J`.

    Raises
    ------
    DegenerateModel
        if :math:`J = 0`.
    """
    if p.J > 0:
        return concurrence_xxz_afm(p, t)
    elif p.J < 0:
        return concurrence_xxz_fm(p, t)
    raise DegenerateModel("The XXZ concurrence is undefined for J = 0")


def concurrence_isotropic(J, t):
    """
    Concurrence of the antiferromagnetic isotropic Heisenberg model (:math:`\\Delta = 1`),
    :math:`\\max((e^{2J/T} - 3)/(e^{2J/T} + 3), 0)`.
    """
    return concurrence_xxz_afm(XXZParams(J=J, delta=1), t)


def concurrence_dm(p, t):
    """
    Concurrence of the DM model, with :math:`x = |J|\\sqrt{1+D^2}/T`:

    .. math::

        C = \\max\\left(\\frac{\\sinh x - 1}{\\cosh x + 1}, 0\\right)

    It is identical for both signs of :math:`J` and of :math:`D`.

    Parameters
    ----------
    p : DMParams
    t : float or Temperature

    Returns
    -------
    C : float

    Raises
    ------
    DegenerateModel
        if :math:`J = 0`.
    """
    t = Temperature(t)
    if p.J == 0:
        raise DegenerateModel("The DM concurrence is undefined for J = 0")
    return _branch(abs(p.J) * hypot(1, p.D) / t, 0.0)


def closed_concurrence(p, t):
    """
    Closed-form concurrence of the thermal state of any model that has one.

    Parameters
    ----------
    p : XXZParams or DMParams
    t : float or Temperature

    Returns
    -------
    C : float

    Raises
    ------
    NotImplementedError
        if no closed form is known for this model.
    """
    if isinstance(p, XXZParams):
        return concurrence_xxz(p, t)
    elif isinstance(p, DMParams):
        return concurrence_dm(p, t)
    raise NotImplementedError(f"No closed-form concurrence for {type(p).__name__}")


def numeric_concurrence(p, t):
    """
    Concurrence of the thermal state of any model, computed from its Hamiltonian alone:
    Gibbs state by exact diagonalization, then Wootters' formula.

    Parameters
    ----------
    p : AbstractModel
    t : float or Temperature

    Returns
    -------
    result : ConcurrenceResult
    """
    state = gibbs_state(p.hamiltonian(), t, model_tag=repr(p))
    return wootters_concurrence(state.rho)
