# -*- coding: utf-8 -*-
__author__ = "Laurent P. René de Cotret"
__email__ = "laurent.renedecotret@mail.mcgill.ca"
__license__ = "GPLv3"
__version__ = "1.0.0"

from .meta import QubithermError, ModelParameter
from .linalg import (
    HermitianEigenDecomposition,
    NoConvergence,
    NotHermitian,
    NotPSD,
    Overflow,
    hermitian_eigen,
    kron,
    matexp_hermitian,
    psd_sqrt,
)
from .models import (
    AbstractModel,
    DegenerateModelWarning,
    DMParams,
    GeneralHeisenbergDMParams,
    Spectrum,
    StateLabel,
    XXZParams,
    build_dm,
    build_general,
    build_xxz,
    closed_spectrum_dm,
    closed_spectrum_xxz,
    model_class,
    model_names,
)
from .thermal import (
    InvalidDensityMatrix,
    Temperature,
    TemperatureOutOfRange,
    ThermalState,
    closed_rho_dm,
    closed_rho_xxz,
    gibbs_state,
)
from .concurrence import (
    ConcurrenceResult,
    DegenerateModel,
    WrongSign,
    closed_concurrence,
    closed_lambdas_dm,
    closed_lambdas_xxz,
    concurrence_dm,
    concurrence_isotropic,
    concurrence_xxz,
    concurrence_xxz_afm,
    concurrence_xxz_fm,
    numeric_concurrence,
    spin_flip,
    wootters_concurrence,
)
from .critical import (
    CurveModel,
    NoRoot,
    TcResult,
    isotropic_tc,
    tc_dm,
    tc_phase_curve,
    tc_xxz,
    tc_xxz_afm,
    tc_xxz_fm,
)
from .sweep import (
    PRESETS,
    ProxyTemperatureWarning,
    SweepSpec,
    SweepSpecError,
    pmap,
)
