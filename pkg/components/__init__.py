# components/__init__.py

from .errors import HwenoError, ConfigurationError, NumericalStateError, ConstructionError
from .grid import Grid1, Grid2, MIN_GHOST
from .moments import MomentField, init_moments
from .boundary import (
    BoundaryKind, SideCondition, BoundarySpec, fill_ghosts, obstacle_mask,
    dmr_shock_x, euler2d_conservative, DMR_POST_SHOCK, DMR_PRE_SHOCK,
)
