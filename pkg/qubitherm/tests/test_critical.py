# -*- coding: utf-8 -*-
from math import asinh, exp, expm1, log, sinh, sqrt

import numpy as np

from qubitherm import (
    CurveModel,
    DegenerateModel,
    DegenerateModelWarning,
    DMParams,
    NoRoot,
    TcResult,
    WrongSign,
    XXZParams,
    concurrence_dm,
    concurrence_xxz,
    isotropic_tc,
    tc_dm,
    tc_phase_curve,
    tc_xxz,
    tc_xxz_afm,
    tc_xxz_fm,
)
import pytest

ISOTROPIC_TC = 2 / log(3)
XY_TC = 1 / asinh(1)


@pytest.fixture
def delta_grid():
    return np.round(np.linspace(-1, 3, 41), 10)


def test_isotropic_afm_critical_temperature():
    """ Test that T_C = 2J/ln 3 for the isotropic antiferromagnet """
    result = tc_xxz_afm(XXZParams(J=1, delta=1))
    assert result.exists
    assert abs(result.tc - ISOTROPIC_TC) < 1e-9
    assert abs(result.tc - 1.820478) < 1e-6
    assert abs(result.residual) < 1e-10
    assert result.bracket[0] < result.tc < result.bracket[1]

    assert isotropic_tc(1) == ISOTROPIC_TC
    assert isotropic_tc(2) == 2 * ISOTROPIC_TC


@pytest.mark.parametrize("J", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("delta", [-0.5, 0.0, 0.5, 2.0])
def test_critical_temperature_scaling(J, delta):
    """ Test that critical temperatures scale with |J| """
    afm = tc_xxz_afm(XXZParams(J=J, delta=delta)).tc
    afm_reference = tc_xxz_afm(XXZParams(J=1, delta=delta)).tc
    assert abs(afm - J * afm_reference) < 1e-10 * J * afm_reference

    fm = tc_xxz_fm(XXZParams(J=-J, delta=-delta)).tc
    fm_reference = tc_xxz_fm(XXZParams(J=-1, delta=-delta)).tc
    assert abs(fm - J * fm_reference) < 1e-10 * J * fm_reference


def test_critical_temperature_equal_at_xx_point():
    """ Test that the AFM and FM critical temperatures coincide at delta = 0 """
    afm = tc_xxz_afm(XXZParams(J=1, delta=0))
    fm = tc_xxz_fm(XXZParams(J=-1, delta=0))
    assert abs(afm.tc - XY_TC) < 1e-9
    assert abs(fm.tc - XY_TC) < 1e-9
    assert abs(afm.tc - 1.134593) < 1e-6


def test_critical_temperature_existence():
    """ Test that critical temperatures exist only where the model is ever entangled """
    assert not tc_xxz_afm(XXZParams(J=1, delta=-1)).exists
    assert not tc_xxz_afm(XXZParams(J=1, delta=-2)).exists
    assert not tc_xxz_fm(XXZParams(J=-1, delta=1)).exists
    assert not tc_xxz_fm(XXZParams(J=-1, delta=2)).exists

    absent = tc_xxz_fm(XXZParams(J=-1, delta=1))
    assert absent.tc is None
    assert absent.bracket is None

    fm = tc_xxz_fm(XXZParams(J=-1, delta=-1))
    assert fm.exists
    assert abs(fm.tc - ISOTROPIC_TC) < 1e-9


@pytest.mark.parametrize("delta", [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0])
def test_critical_temperature_residuals(delta):
    """ Test that the roots solve sinh(J/T) = exp(-J delta/T) """
    result = tc_xxz_afm(XXZParams(J=1, delta=delta))
    t = result.tc
    assert t > 0
    assert abs(result.residual) < 1e-10
    assert abs(sinh(1 / t) - exp(-delta / t)) / exp(-delta / t) < 1e-10


def test_tc_xxz_dispatch():
    """ Test that tc_xxz dispatches on the sign of J """
    assert tc_xxz(XXZParams(J=1, delta=0.5)) == tc_xxz_afm(XXZParams(J=1, delta=0.5))
    assert tc_xxz(XXZParams(J=-1, delta=0.5)) == tc_xxz_fm(XXZParams(J=-1, delta=0.5))

    with pytest.warns(DegenerateModelWarning):
        p = XXZParams(J=0, delta=0.5)
    with pytest.raises(DegenerateModel):
        tc_xxz(p)


def test_wrong_sign():
    """ Test that the sign of J is checked """
    with pytest.raises(WrongSign):
        tc_xxz_afm(XXZParams(J=-1, delta=0))

    with pytest.raises(WrongSign):
        tc_xxz_fm(XXZParams(J=1, delta=0))

    with pytest.raises(WrongSign):
        isotropic_tc(-1)


def test_dm_critical_temperature():
    """ Test T_C = |J| sqrt(1 + D^2) / asinh(1) """
    result = tc_dm(DMParams(J=1, D=0))
    assert abs(result.tc - 1.134593) < 1e-4
    assert abs(result.tc - 1 / asinh(1)) < 1e-10
    assert abs(result.residual) < 1e-10
    assert result.bracket[0] < result.tc < result.bracket[1]


@pytest.mark.parametrize("D", [1.0, 2.0, 3.0])
def test_dm_critical_temperature_scaling(D):
    """ Test that the DM critical temperature scales as sqrt(1 + D^2) """
    reference = tc_dm(DMParams(J=1, D=0)).tc
    assert abs(tc_dm(DMParams(J=1, D=D)).tc / reference - sqrt(1 + D ** 2)) < 1e-12
    assert tc_dm(DMParams(J=-1, D=-D)).tc == tc_dm(DMParams(J=1, D=D)).tc


def test_dm_critical_temperature_degenerate():
    """ Test that J = 0 is rejected """
    with pytest.warns(DegenerateModelWarning):
        p = DMParams(J=0, D=1)
    with pytest.raises(DegenerateModel):
        tc_dm(p)


@pytest.mark.parametrize("delta", [-0.99, -0.999, -0.9995, -0.9999])
def test_critical_temperature_near_ferromagnetic_limit(delta):
    """ Test that critical temperatures close to zero are found, with small residuals """
    p = XXZParams(J=1, delta=delta)
    result = tc_xxz_afm(p)
    assert result.exists
    assert 0 < result.tc < 0.25
    assert abs(result.residual) < 1e-10
    assert concurrence_xxz(p, 0.999999 * result.tc) > 0
    assert concurrence_xxz(p, 1.000001 * result.tc) == 0

    # Root of 1 - exp(-2x) = 2 exp(-(1 + delta) x), x = J/T
    x = 1 / result.tc
    assert abs(-expm1(-2 * x) - 2 * exp(-(1 + delta) * x)) < 1e-10


def test_no_root_below_lower_bound():
    """ Test that critical temperatures below the bracket are reported """
    with pytest.raises(NoRoot):
        tc_xxz_afm(XXZParams(J=1, delta=-1 + 1e-12))

    ((_, result),) = tc_phase_curve("afm", [-1 + 1e-12], J=1)
    assert not result.exists
    assert result.error is not None


def test_phase_curve_monotonic(delta_grid):
    """ Test that T_C increases with delta for the antiferromagnet and decreases for the ferromagnet """
    afm = tc_phase_curve(CurveModel.AFM, delta_grid, J=1)
    fm = tc_phase_curve(CurveModel.FM, delta_grid, J=-1)

    assert [v for v, _ in afm] == list(delta_grid)

    afm_tc = [r.tc for d, r in afm if r.exists]
    fm_tc = [r.tc for d, r in fm if r.exists]
    assert np.all(np.diff(afm_tc) >= 0)
    assert np.all(np.diff(fm_tc) <= 0)

    # Existence domains: delta > -1 (AFM), delta < 1 (FM)
    assert [d for d, r in afm if not r.exists] == [-1.0]
    assert [d for d, r in fm if not r.exists] == [d for d in delta_grid if d >= 1]

    # Curves cross at delta = 0
    afm_zero = dict(afm)[0.0].tc
    fm_zero = dict(fm)[0.0].tc
    assert abs(afm_zero - 1.134593) < 1e-6
    assert abs(afm_zero - fm_zero) < 1e-9


def test_phase_curve_symmetry(delta_grid):
    """ Test that T_C,AFM(delta) = T_C,FM(-delta) """
    for delta in delta_grid:
        afm = tc_xxz_afm(XXZParams(J=1, delta=delta))
        fm = tc_xxz_fm(XXZParams(J=-1, delta=-delta))
        assert afm.exists == fm.exists
        if afm.exists:
            assert afm.tc == fm.tc


def test_phase_curve_dm():
    """ Test the DM critical temperature along a grid of D """
    curve = tc_phase_curve("dm", [0, 1, 2], J=1)
    assert [r.tc for _, r in curve] == [tc_dm(DMParams(J=1, D=D)).tc for D in [0, 1, 2]]


def test_phase_curve_multiprocess():
    """ Test that parallel evaluation preserves the order of the grid """
    grid = [-0.5, 0.0, 0.5, 1.0, 2.0]
    serial = tc_phase_curve("afm", grid, J=1, processes=1)
    parallel = tc_phase_curve("afm", grid, J=1, processes=2)
    assert serial == parallel


def test_phase_curve_wrong_sign():
    """ Test that the sign of J must match the curve """
    with pytest.raises(WrongSign):
        tc_phase_curve("afm", [0], J=-1)

    with pytest.raises(WrongSign):
        tc_phase_curve("fm", [0], J=1)

    with pytest.raises(DegenerateModel):
        tc_phase_curve("dm", [0], J=0)

    with pytest.raises(ValueError):
        tc_phase_curve("ising", [0], J=1)


def test_concurrence_vanishes_at_critical_temperature(delta_grid):
    """ Test that the concurrence is positive just below T_C and zero just above """
    for delta in delta_grid:
        for J in [1, -1]:
            p = XXZParams(J=J, delta=delta)
            result = tc_xxz(p)
            if not result.exists:
                continue
            assert concurrence_xxz(p, 0.999999 * result.tc) > 0
            assert concurrence_xxz(p, 1.000001 * result.tc) == 0

    for D in [0, 0.5, 1, 2, 3]:
        p = DMParams(J=1, D=D)
        result = tc_dm(p)
        assert concurrence_dm(p, 0.999999 * result.tc) > 0
        assert concurrence_dm(p, 1.000001 * result.tc) == 0


def test_tc_result_absent():
    """ Test the representation of a missing critical temperature """
    absent = TcResult.absent(error="reason")
    assert not absent.exists
    assert absent.tc is None
    assert absent.error == "reason"
