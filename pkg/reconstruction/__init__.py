# reconstruction/__init__.py

from .weights import EPSILON, LinearWeights, nonlinear_weights, hweno_combine
from .polynomial import Candidate1D, cell_average_monomial, first_moment_monomial
from .hermite_1d import (
    StencilData1, modify_first_moment, smoothness_1d_moment, smoothness_1d_interface,
    hweno_interface, linear_interface, linear_internal, stencil_from_arrays,
)
from .hermite_2d import (
    StencilData2, Quartic2Kernel, CandidateKernel2, HwenoKernel2,
    build_quartic_kernel, build_quadratic_kernels, kernel_set,
    modify_moments_2d, hweno_point_2d, linear_point_2d, smoothness_2d,
    interface_points, interior_points,
)
