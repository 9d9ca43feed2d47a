# problems/__init__.py

from .exact import SineData, burgers_solution, burgers1d_exact, burgers2d_exact, euler_advection_density
from .riemann import PrimitiveState, RiemannSolution
from .registry import ProblemSpec, PROBLEMS, SOD, get_problem, problem_names
