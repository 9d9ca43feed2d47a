# physics/__init__.py

from .quadrature import QuadratureRule, GAUSS_LOBATTO_4, GAUSS_3, gauss_legendre
from .equations import (
    EquationModel, Burgers1D, Burgers2D, Euler1D, Euler2D,
    make_model, MODELS,
)
from .flux import lax_friedrichs, wavespeed_bound
