# actions/__init__.py

from .config_actions import RunConfig, ConfigActions, parse_config_text
from .output_actions import (
    OutputActions, atomic_write_text, solution_1d_text, read_solution_1d, grid_2d_text, read_grid_2d,
)
from .reference_actions import (
    ReferenceActions, CellAverages, ErrorNorms, error_norms, restrict_averages, compare_to_reference,
    exact_cell_averages,
)
from .convergence_actions import ConvergenceActions, ConvergenceReport, ConvergenceRow
from .benchmark_actions import BenchmarkActions, BenchmarkResult
