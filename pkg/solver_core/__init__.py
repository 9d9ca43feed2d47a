# solver_core/__init__.py

from .scheme import DEFAULT_CFL, KXRCF_DEGREE, IndicatorMode, GammaChoice, SchemeMode
from .indicator import TroubleMap, kxrcf_flag, uniform_trouble_map, IndicatorMixin
from .limiter import modify_troubled_1d, modify_troubled_2d
from .rhs_1d import rhs_1d
from .rhs_2d import rhs_2d
from .time_stepping import step_rk3, compute_dt, RunResult, TimeSteppingMixin
from .solver import HwenoSolver
