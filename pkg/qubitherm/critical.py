# -*- coding: utf-8 -*-
"""
Critical temperatures
=====================

Temperature :math:`T_C` above which the thermal concurrence vanishes. For the XXZ
model, :math:`T_C` is the root of a transcendental equation found by bisection; for
the DM model, :math:`T_C = |J|\\sqrt{1+D^2}/\\sinh^{-1}(1)`.
"""
import logging
from enum import Enum
from functools import partial
from math import asinh, exp, expm1, log, sinh
from typing import NamedTuple, Optional, Tuple

from scipy.optimize import bisect

from .concurrence import DegenerateModel, WrongSign
from .meta import QubithermError
from .models import DMParams, XXZParams

logger = logging.getLogger(__name__)

LOWER_BOUND = 1e-8  # in units of |J|
MAX_DOUBLINGS = 60
MAX_ITERATIONS = 200
XTOL = 1e-15  # in units of |J|; bisect also stops at a relative tolerance of 4 eps
RESIDUAL_TOL = 1e-10


class NoRoot(QubithermError, ArithmeticError):
    """ Raised when no critical temperature could be bracketed or converged upon. """

    pass


class TcResult(NamedTuple):
    """
    Critical temperature ``tc``, with the residual of its defining equation and the
    interval over which its equation was bracketed. If ``exists`` is False, the model is never entangled
    and ``tc`` is None.

    For the XXZ model, the residual is that of :math:`\\sinh(J/T) - e^{-aJ/T}` multiplied by
    :math:`2e^{-J/T}`, which stays finite as :math:`T_C \\to 0`.
    """

    tc: Optional[float]
    residual: Optional[float]
    bracket: Optional[Tuple[float, float]]
    exists: bool
    iterations: int = 0
    error: Optional[str] = None

    @classmethod
    def absent(cls, error=None):
        return cls(tc=None, residual=None, bracket=None, exists=False, error=error)


class CurveModel(Enum):
    AFM = "afm"
    FM = "fm"
    DM = "dm"


def _scaled_numerator(t, J, a):
    """
    :math:`\\sinh(J/T) - e^{-aJ/T}` multiplied by :math:`2e^{-J/T} > 0`. Same sign and root,
    but finite for all :math:`T > 0` when :math:`a > -1`.
    """
    x = J / t
    return -expm1(-2 * x) - 2 * exp(-(1 + a) * x)


def _bracket(f, J):
    """ Interval ``(lo, hi)`` over which ``f`` changes sign, found by doubling ``hi``. """
    lo, hi = LOWER_BOUND * J, J
    if f(lo) <= 0:
        raise NoRoot(f"Residual is not positive at the lower bound T = {lo}")

    for doubling in range(MAX_DOUBLINGS + 1):
        if f(hi) < 0:
            return lo, hi
        if doubling == MAX_DOUBLINGS:
            raise NoRoot(
                f"No sign change of the residual up to T = {hi} ({MAX_DOUBLINGS} doublings)"
            )
        lo, hi = hi, 2 * hi


def _solve(J, a):
    """
    Root of :math:`\\sinh(J/T) = e^{-aJ/T}` in :math:`T`, for :math:`J > 0` and :math:`a > -1`.
    The reported residual is that of the scaled equation, which is solved directly.
    """
    f = partial(_scaled_numerator, J=J, a=a)
    lo, hi = _bracket(f, J)
    logger.debug(f"Critical temperature bracketed in ({lo}, {hi})")

    try:
        tc, info = bisect(
            f, lo, hi, xtol=XTOL * J, maxiter=MAX_ITERATIONS, full_output=True
        )
    except RuntimeError as e:
        raise NoRoot(str(e))
    logger.debug(f"Bisection converged in {info.iterations} iterations: T = {tc}")

    residual = f(tc)
    if abs(residual) >= RESIDUAL_TOL:
        raise NoRoot(f"Residual {residual:.3e} at T = {tc} exceeds {RESIDUAL_TOL}")

    return TcResult(
        tc=tc,
        residual=residual,
        bracket=(lo, hi),
        exists=True,
        iterations=info.iterations,
    )


def tc_xxz_afm(p):
    """
    Critical temperature of the antiferromagnetic XXZ model, root of

    .. math::

        \\sinh(J/T) = e^{-J\\Delta/T}.

    There is no thermal entanglement for :math:`\\Delta \\leq -1`.

    Parameters
    ----------
    p : XXZParams
        Model with :math:`J > 0`.

    Returns
    -------
    result : TcResult

    Raises
    ------
    WrongSign
        if :math:`J \\leq 0`.
    NoRoot
        if the root could not be found.
    """
    J, delta = p.J, p.delta
    if J <= 0:
        raise WrongSign(f"Antiferromagnetic critical temperature requires J > 0, got {J}")
    if delta <= -1:
        return TcResult.absent()
    return _solve(J, delta)


def tc_xxz_fm(p):
    """
    Critical temperature of the ferromagnetic XXZ model, root of

    .. math::

        \\sinh(|J|/T) = e^{|J|\\Delta/T}.

    There is no thermal entanglement for :math:`\\Delta \\geq 1`.

    Parameters
    ----------
    p : XXZParams
        Model with :math:`J < 0`.

    Returns
    -------
    result : TcResult

    Raises
    ------
    WrongSign
        if :math:`J \\geq 0`.
    NoRoot
        if the root could not be found.
    """
    J, delta = abs(p.J), p.delta
    if p.J >= 0:
        raise WrongSign(f"Ferromagnetic critical temperature requires J < 0, got {p.J}")
    if delta >= 1:
        return TcResult.absent()
    return _solve(J, -delta)


def tc_xxz(p):
    """
    Critical temperature of the XXZ model, dispatched on the sign of :math:`J`.

    Raises
    ------
    DegenerateModel
        if :math:`J = 0`.
    """
    if p.J > 0:
        return tc_xxz_afm(p)
    elif p.J < 0:
        return tc_xxz_fm(p)
    raise DegenerateModel("The XXZ critical temperature is undefined for J = 0")


def isotropic_tc(J):
    """ Critical temperature :math:`2J/\\ln 3` of the antiferromagnetic isotropic Heisenberg model. """
    if J <= 0:
        raise WrongSign(f"Antiferromagnetic critical temperature requires J > 0, got {J}")
    return 2 * J / log(3)


def tc_dm(p):
    """
    Critical temperature of the DM model,

    .. math::

        T_C = \\frac{|J|\\sqrt{1+D^2}}{\\sinh^{-1}(1)} \\approx 1.1346 \\sqrt{1+D^2}|J|.

    The residual is that of :math:`\\sinh(|J|\\sqrt{1+D^2}/T) = 1`.

    Parameters
    ----------
    p : DMParams

    Returns
    -------
    result : TcResult

    Raises
    ------
    DegenerateModel
        if :math:`J = 0`.
    """
    if p.J == 0:
        raise DegenerateModel("The DM critical temperature is undefined for J = 0")
    gap = abs(p.gap)
    tc = gap / asinh(1)
    # Closed form: the bracket only accounts for rounding
    half_width = 1e-12 * tc
    return TcResult(
        tc=tc,
        residual=sinh(gap / tc) - 1,
        bracket=(tc - half_width, tc + half_width),
        exists=True,
    )


def _curve_point(value, model, J):
    if model is CurveModel.DM:
        p, solver = DMParams(J=J, D=value), tc_dm
    elif model is CurveModel.AFM:
        p, solver = XXZParams(J=J, delta=value), tc_xxz_afm
    else:
        p, solver = XXZParams(J=J, delta=value), tc_xxz_fm

    try:
        return value, solver(p)
    except NoRoot as e:
        logger.warning(f"No critical temperature for {p!r}: {e}")
        return value, TcResult.absent(error=str(e))


def tc_phase_curve(model, grid, J, processes=1):
    """
    Critical temperatures along a grid of anisotropy parameters, :math:`\\Delta` for the
    XXZ models and :math:`D` for the DM model.

    Failures at individual points are recorded in the ``error`` field of the
    corresponding result; they do not interrupt the curve.

    Parameters
    ----------
    model : CurveModel or str
        One of 'afm', 'fm' or 'dm'.
    grid : iterable of float
        Values of the anisotropy parameter.
    J : float
        Exchange constant. Must be positive for 'afm', negative for 'fm'.
    processes : int, optional
        Number of processes evaluating grid points. Results are in the order of ``grid``.

    Returns
    -------
    curve : list of (float, TcResult)

    Raises
    ------
    WrongSign
        if the sign of ``J`` does not match ``model``.
    DegenerateModel
        if ``J = 0``.
    """
    # Avoid circular import
    from .sweep import pmap

    model = CurveModel(model)
    if J == 0:
        raise DegenerateModel("Critical temperatures are undefined for J = 0")
    if model is CurveModel.AFM and J < 0:
        raise WrongSign(f"Antiferromagnetic curve requires J > 0, got {J}")
    if model is CurveModel.FM and J > 0:
        raise WrongSign(f"Ferromagnetic curve requires J < 0, got {J}")

    func = partial(_curve_point, model=model, J=J)
    return list(pmap(func, [float(v) for v in grid], processes=processes))
