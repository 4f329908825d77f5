# -*- coding: utf-8 -*-
"""
Parameter sweeps
================

Grids of model parameters and temperatures, evaluated point by point and
written as CSV. Temperature sweeps and critical-temperature tables are the
datasets behind the concurrence-versus-temperature and critical-temperature
phase curves.
"""
import csv
import logging
from functools import partial
from itertools import product
from math import isfinite
from multiprocessing import Pool
from typing import List, NamedTuple, Optional, Tuple
from warnings import warn

import numpy as np

from . import __version__
from .concurrence import closed_concurrence, numeric_concurrence
from .critical import CurveModel, tc_phase_curve
from .meta import QubithermError
from .models import model_class, model_names
from .thermal import TemperatureOutOfRange

logger = logging.getLogger(__name__)

# A requested temperature of 0 is evaluated at this multiple of |J|
ZERO_TEMPERATURE_PROXY = 1e-4

# Largest tolerated |C_closed - C_numeric| in self-check mode
SELF_CHECK_TOL = 1e-9

METHODS = ("closed", "numeric", "both")

# Reference parameter sets. Where a curve has no stated anisotropy,
# representative values are used.
PRESETS = {
    "fig1": dict(
        command="tc",
        model="xxz",
        J=1.0,
        delta=tuple(np.round(np.linspace(-1, 3, 41), 10)),
        sign="both",
    ),
    "fig2a": dict(
        command="sweep",
        model="xxz",
        J=1.0,
        delta=(0.0, 0.5, 1.0, 2.0),
        tmin=0.0,
        tmax=3.0,
        steps=61,
        note="representative Delta values",
    ),
    "fig2b": dict(
        command="sweep",
        model="dm",
        J=1.0,
        D=(0.0, 0.5, 1.0, 2.0),
        tmin=0.0,
        tmax=4.0,
        steps=81,
        note="representative D values",
    ),
}


class SweepSpecError(QubithermError, ValueError):
    """ Raised when a sweep specification is inconsistent. """

    pass


class ProxyTemperatureWarning(UserWarning):
    """ Warning for a temperature of 0 evaluated at a small positive proxy instead. """

    pass


def pmap(func, iterable, args=None, kwargs=None, processes=1):
    """
    Parallel application of a function with keyword arguments. Results are
    yielded in the order of ``iterable``.

    Parameters
    ----------
    func : callable
        Function to be applied to every element of `iterable`.
    iterable : iterable
        Iterable of items to be mapped.
    args : tuple or None, optional
        Positional arguments of `function`.
    kwargs : dictionary or None, optional
        Keyword arguments of `function`.
    processes : int or None, optional
        Number of processes to use. If `None`, maximal number of processes
        is used. Default is one.

    Yields
    ------
    Mapped values.
    """
    if kwargs is None:
        kwargs = dict()

    if args is None:
        args = tuple()

    func = partial(func, *args, **kwargs)

    if processes == 1:
        yield from map(func, iterable)
        return

    with Pool(processes) as pool:
        yield from pool.imap(func=func, iterable=iterable, chunksize=1)


def format_number(value):
    """ Locale-independent rendering with 12 significant digits. None is an empty cell. """
    if value is None:
        return ""
    return format(float(value), ".12g")


def _label_value(value):
    return format(float(value), "g")


class SweepSpec:
    """
    Specification of a sweep: a model, grids of its parameters and of temperature,
    and the evaluation method.

    Parameters
    ----------
    model : str
        Name of a concrete model, one of :func:`model_names`, e.g. 'xxz', 'dm' or 'general'.
    J : float
        Exchange constant.
    temperatures : iterable of float
        Temperatures, non-negative. Zero is evaluated at ``1e-4 * |J|``.
    delta : iterable of float or None, optional
        Anisotropy grid, for the 'xxz' and 'general' models.
    D : iterable of float or None, optional
        DM coupling grid, for the 'dm' model, or along z for the 'general' model.
    Dvec : 3-tuple of float or None, optional
        DM vector of the 'general' model. Exclusive with ``D``.
    method : {'closed', 'numeric', 'both'}, optional

    Raises
    ------
    SweepSpecError
        if the specification is inconsistent.
    """

    def __init__(
        self,
        model,
        J,
        temperatures,
        delta=None,
        D=None,
        Dvec=None,
        method="closed",
    ):
        try:
            self.model_class = model_class(model)
        except ValueError:
            raise SweepSpecError(f"Unknown model {model}; expected one of {model_names()}")
        if method not in METHODS:
            raise SweepSpecError(f"Unknown method {method}; expected one of {METHODS}")

        J = float(J)
        if not isfinite(J):
            raise SweepSpecError(f"J must be finite, got {J}")

        valid = self.model_class.valid_parameters
        # A DM vector of arbitrary direction can also be swept along z
        accepted = set(valid) | ({"D"} if "Dvec" in valid else set())
        given = {
            name
            for name, values in (("delta", delta), ("D", D), ("Dvec", Dvec))
            if values is not None
        }
        if given - accepted:
            raise SweepSpecError(
                f"The {model} model has no parameter {', '.join(sorted(given - accepted))}"
            )
        if "Dvec" in valid and D is not None and Dvec is not None:
            raise SweepSpecError("D and Dvec are exclusive")

        self.model = model
        self.J = J
        self.method = method
        self.delta = self._grid("delta", delta) if "delta" in valid else None
        self.D = self._grid("D", D) if ("D" in valid or D is not None) else None
        self.Dvec = None
        if "Dvec" in valid and self.D is None:
            self.Dvec = self._vector(Dvec)

        self.temperature_range = None
        self.requested_temperatures = self._grid("T", temperatures, default=None)
        if any(t < 0 for t in self.requested_temperatures):
            raise SweepSpecError("Temperatures must be non-negative")
        self.temperatures = self._substitute_proxy(self.requested_temperatures)

    @classmethod
    def from_range(cls, model, J, tmin, tmax, steps, **kwargs):
        """
        Specification over ``steps`` evenly-spaced temperatures from ``tmin`` to ``tmax``.

        Raises
        ------
        SweepSpecError
            if the bounds are not finite, ``tmin < 0``, ``tmax <= tmin`` or ``steps < 2``.
        """
        tmin, tmax = float(tmin), float(tmax)
        if not (isfinite(tmin) and isfinite(tmax)):
            raise SweepSpecError("Temperature bounds must be finite")
        if tmin < 0:
            raise SweepSpecError(f"tmin must be non-negative, got {tmin}")
        if tmax <= tmin:
            raise SweepSpecError(f"tmax must exceed tmin, got tmin={tmin}, tmax={tmax}")
        if int(steps) < 2:
            raise SweepSpecError(f"At least 2 temperature steps are required, got {steps}")

        spec = cls(model, J, np.linspace(tmin, tmax, int(steps)), **kwargs)
        spec.temperature_range = (tmin, tmax, int(steps))
        return spec

    def __repr__(self):
        return f"< {type(self).__name__} of the {self.model} model over {len(self.temperatures)} temperatures >"

    @staticmethod
    def _grid(name, values, default=(0.0,)):
        if values is None:
            if default is None:
                raise SweepSpecError(f"No values for {name}")
            return default
        values = tuple(float(v) for v in np.atleast_1d(values))
        if len(values) == 0:
            raise SweepSpecError(f"Empty grid for {name}")
        if not all(isfinite(v) for v in values):
            raise SweepSpecError(f"Grid values of {name} must be finite")
        return values

    @staticmethod
    def _vector(Dvec):
        if Dvec is None:
            return (0.0, 0.0, 0.0)
        Dvec = tuple(float(c) for c in Dvec)
        if len(Dvec) != 3 or not all(isfinite(c) for c in Dvec):
            raise SweepSpecError(f"Dvec must have 3 finite components, got {Dvec}")
        return Dvec

    @property
    def proxy(self):
        """ Temperature substituted for T = 0. """
        return ZERO_TEMPERATURE_PROXY * abs(self.J)

    @property
    def uses_proxy(self):
        return 0.0 in self.requested_temperatures

    def _substitute_proxy(self, temperatures):
        if 0.0 not in temperatures:
            return temperatures
        if self.J == 0:
            raise SweepSpecError("T = 0 cannot be approximated for J = 0")

        warn(
            f"T = 0 is evaluated at T = {self.proxy}",
            category=ProxyTemperatureWarning,
            stacklevel=3,
        )
        logger.info(f"Requested temperature 0 replaced by {self.proxy}")
        return tuple(self.proxy if t == 0 else t for t in temperatures)

    def _axes(self):
        """ Parameter grids as lists of (label, keyword arguments), in label order. """
        axes = list()
        if self.delta is not None:
            axes.append([(f"delta={_label_value(d)}", dict(delta=d)) for d in self.delta])
        if self.D is not None:
            name = "D" if "D" in self.model_class.valid_parameters else "Dvec"
            axes.append(
                [
                    (f"D={_label_value(d)}", {name: d if name == "D" else (0.0, 0.0, d)})
                    for d in self.D
                ]
            )
        if self.Dvec is not None:
            vector = ":".join(_label_value(c) for c in self.Dvec)
            axes.append([(f"Dvec={vector}", dict(Dvec=self.Dvec))])
        return axes

    def parameter_sets(self):
        """
        Models along the parameter grid.

        Returns
        -------
        sets : list of (str, AbstractModel)
            Column label and model, in grid order.
        """
        sets = list()
        for point in product(*self._axes()):
            label = " ".join(part for part, _ in point)
            kwargs = dict(J=self.J)
            for _, parameters in point:
                kwargs.update(parameters)
            sets.append((label, self.model_class(**kwargs)))
        return sets

    def metadata(self):
        """ Self-description of this sweep, as (key, value) pairs. """
        meta = [
            ("tool", f"qubitherm {__version__}"),
            ("model", self.model),
            ("J", format_number(self.J)),
        ]
        if self.delta is not None:
            meta.append(("delta", ",".join(map(_label_value, self.delta))))
        if self.D is not None:
            meta.append(("D", ",".join(map(_label_value, self.D))))
        if self.Dvec is not None:
            meta.append(("Dvec", ",".join(map(_label_value, self.Dvec))))
        if self.temperature_range is not None:
            tmin, tmax, steps = self.temperature_range
            meta.append(
                ("temperatures", f"{_label_value(tmin)} to {_label_value(tmax)} in {steps} steps")
            )
        meta.append(("method", self.method))
        if self.uses_proxy:
            meta.append(
                ("zero temperature", f"T=0 evaluated at T={format_number(self.proxy)} (1e-4*|J|)")
            )
        return meta


class Gridpoint(NamedTuple):
    """ Concurrences of one model at one temperature. None where not evaluated. """

    closed: Optional[float]
    numeric: Optional[float]

    @property
    def difference(self):
        if self.closed is None or self.numeric is None:
            return None
        return abs(self.closed - self.numeric)


def evaluate(model, t, method="closed"):
    """
    Concurrence of the thermal state of ``model`` at temperature ``t``.

    Models without closed forms have no closed value. The numeric value is missing
    if the Gibbs state cannot be represented at this temperature.

    Parameters
    ----------
    model : AbstractModel
    t : float
    method : {'closed', 'numeric', 'both'}, optional

    Returns
    -------
    point : Gridpoint
    """
    closed, numeric = None, None

    if method in ("closed", "both"):
        try:
            closed = closed_concurrence(model, t)
        except NotImplementedError:
            logger.debug(f"No closed form for {model!r}")

    if method in ("numeric", "both"):
        try:
            numeric = numeric_concurrence(model, t).value
        except TemperatureOutOfRange as e:
            logger.warning(f"Numeric concurrence of {model!r} skipped at T = {t}: {e}")

    logger.debug(f"{model!r} at T = {t}: closed {closed}, numeric {numeric}")
    return Gridpoint(closed=closed, numeric=numeric)


class Table(NamedTuple):
    """ CSV-ready table: metadata, header and rows of numbers (None for empty cells). """

    metadata: List[Tuple[str, str]]
    header: List[str]
    rows: List[list]
    max_difference: Optional[float] = None


def _max_difference(points):
    differences = [p.difference for p in points if p.difference is not None]
    return max(differences) if differences else None


def concurrence_point(spec):
    """
    Closed and numeric concurrences at a single point.

    Parameters
    ----------
    spec : SweepSpec
        Specification with a single parameter set and a single temperature.

    Returns
    -------
    table : Table
        Columns T, C_closed, C_numeric, abs_diff.

    Raises
    ------
    SweepSpecError
        if the specification describes more than one point.
    """
    sets = spec.parameter_sets()
    if len(sets) != 1 or len(spec.temperatures) != 1:
        raise SweepSpecError("A single parameter set and temperature are required")

    (_, model), t = sets[0], spec.temperatures[0]
    point = evaluate(model, t, method=spec.method)
    return Table(
        metadata=spec.metadata(),
        header=["T", "C_closed", "C_numeric", "abs_diff"],
        rows=[[t, point.closed, point.numeric, point.difference]],
        max_difference=point.difference,
    )


def _temperature_row(t, models, method):
    return [evaluate(model, t, method=method) for model in models]


def sweep_temperature(spec, processes=1):
    """
    Concurrences over the temperature grid, one column per parameter set (two with
    method 'both'). Rows are in the order of the temperature grid.

    Parameters
    ----------
    spec : SweepSpec
    processes : int, optional
        Number of processes evaluating temperatures.

    Returns
    -------
    table : Table
    """
    labels, models = zip(*spec.parameter_sets())

    header = ["T"]
    for label in labels:
        if spec.method == "both":
            header.extend([f"C_closed[{label}]", f"C_numeric[{label}]"])
        else:
            header.append(f"C[{label}]")

    points = list(
        pmap(
            _temperature_row,
            spec.temperatures,
            kwargs=dict(models=models, method=spec.method),
            processes=processes,
        )
    )

    rows = list()
    for t, row_points in zip(spec.temperatures, points):
        row = [t]
        for point in row_points:
            if spec.method == "both":
                row.extend([point.closed, point.numeric])
            elif spec.method == "closed":
                row.append(point.closed)
            else:
                row.append(point.numeric)
        rows.append(row)

    return Table(
        metadata=spec.metadata(),
        header=header,
        rows=rows,
        max_difference=_max_difference([p for ps in points for p in ps]),
    )


def critical_temperature_table(model, grid, J=1.0, sign="both", processes=1):
    """
    Critical temperatures along a grid of anisotropy parameters.

    Parameters
    ----------
    model : {'xxz', 'dm'}
    grid : iterable of float
        Values of :math:`\\Delta` ('xxz') or :math:`D` ('dm').
    J : float, optional
        Magnitude of the exchange constant. Its sign is set by ``sign`` for 'xxz'.
    sign : {'afm', 'fm', 'both'}, optional
        Branches of the XXZ model to solve.
    processes : int, optional

    Returns
    -------
    table : Table
        Columns delta, Tc_AFM and/or Tc_FM for 'xxz'; D and Tc for 'dm'. Cells are
        empty where no critical temperature exists.

    Raises
    ------
    SweepSpecError
        if the model or sign is not supported.
    """
    grid = SweepSpec._grid("grid", grid)
    J = abs(float(J))
    metadata = [("tool", f"qubitherm {__version__}"), ("model", model), ("|J|", format_number(J))]

    if model == "dm":
        curve = tc_phase_curve(CurveModel.DM, grid, J, processes=processes)
        rows = [[value, result.tc] for value, result in curve]
        return Table(metadata=metadata, header=["D", "Tc"], rows=rows)

    if model != "xxz":
        raise SweepSpecError(f"Critical temperatures are not available for the {model} model")
    if sign not in ("afm", "fm", "both"):
        raise SweepSpecError(f"Unknown sign {sign}")
    metadata.append(("sign", sign))

    header, columns = ["delta"], list()
    if sign in ("afm", "both"):
        header.append("Tc_AFM")
        columns.append(tc_phase_curve(CurveModel.AFM, grid, J, processes=processes))
    if sign in ("fm", "both"):
        header.append("Tc_FM")
        columns.append(tc_phase_curve(CurveModel.FM, grid, -J, processes=processes))

    rows = [
        [value] + [curve[index][1].tc for curve in columns]
        for index, value in enumerate(grid)
    ]
    return Table(metadata=metadata, header=header, rows=rows)


def write_csv(stream, table):
    """
    Write a table as CSV: a ``#``-prefixed metadata block, a header row, then
    rows with numbers rendered to 12 significant digits.

    Parameters
    ----------
    stream : file-like
        Text stream open for writing.
    table : Table
    """
    for key, value in table.metadata:
        stream.write(f"# {key}: {value}\n")

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        if len(row) != len(table.header):
            raise ValueError(f"Row has {len(row)} cells, but the header has {len(table.header)}")
        writer.writerow([format_number(v) for v in row])
