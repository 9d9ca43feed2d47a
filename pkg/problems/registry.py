# problems/registry.py

"""
Registo dos problemas de ensaio.

Cada ProblemSpec sabe construir o modelo, a malha, as fronteiras e o dado
inicial, e (quando existe) a solução exata no instante final. Os onze
problemas registados são os ensaios de precisão e os de choques; o tubo de
Sod fica à parte como dado de referência.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
import math

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.boundary import (
    DMR_POST_SHOCK, DMR_PRE_SHOCK, BoundarySpec, SideCondition, dmr_shock_x, euler2d_conservative,
)
from components.errors import ConfigurationError
from components.grid import Grid1, Grid2
from physics.equations import make_model
from .exact import (
    SineData, burgers1d_exact, burgers2d_exact, euler1d_advection_exact, euler2d_advection_exact,
)
from .riemann import RiemannSolution

BURGERS_DATA = SineData(0.5, 1.0, math.pi)
# (rho, u, p) atrás do choque de Mach 3
SHU_OSHER_POST_SHOCK = (3.857143, 2.629369, 10.333333)


@dataclass(frozen=True)
class ProblemSpec:
    """
    Descrição completa de um problema.

    - `domain`: (x_lo, x_hi) em 1D, (x_lo, x_hi, y_lo, y_hi) em 2D.
    - `cells`: malha por omissão, (n,) ou (nx, ny).
    - `initial(model)`: devolve u0(x) ou u0(x, y).
    - `exact(model, t)`: devolve a solução exata como função, ou None.
    - `contours`: (mínimo, máximo, número de níveis) da densidade, para os problemas 2D de choques.
    """

    name: str
    title: str
    model_name: str
    domain: tuple
    cells: tuple
    final_time: float
    boundary: object
    initial: object
    exact: object = None
    contours: tuple | None = None
    smooth: bool = False
    cfl: float = 0.6

    @property
    def dim(self):
        return 1 if len(self.domain) == 2 else 2

    def make_model(self):
        return make_model(self.model_name)

    def make_grid(self, cells=None, cells_y=None):
        """Malha com `cells` células (e `cells_y` em y); por omissão a malha do problema."""
        if self.dim == 1:
            return Grid1(int(cells or self.cells[0]), *self.domain)
        nx = int(cells or self.cells[0])
        if cells_y is None:
            # mantém a proporção da malha por omissão
            cells_y = nx * self.cells[1] // self.cells[0]
        return Grid2(nx, int(cells_y), *self.domain)

    def make_boundary(self, model):
        return self.boundary(model) if callable(self.boundary) else self.boundary

    def initial_condition(self, model):
        return self.initial(model)

    @property
    def has_exact(self):
        return self.exact is not None

    def exact_solution(self, model, t):
        if self.exact is None:
            raise ConfigurationError(f"O problema {self.name} não tem solução exata")
        return self.exact(model, t)


# --- Dados iniciais e fronteiras ---
def _periodic(dim):
    return BoundarySpec.uniform("periodic", dim)


def _outflow(model):
    return BoundarySpec.uniform("outflow", model.dim)


def _reflective(model):
    return BoundarySpec.uniform("reflective", model.dim)


def _riemann_initial(left, right, x0):
    def initial(model):
        lo = model.conservative(*left)
        hi = model.conservative(*right)
        return lambda x: np.where(x < x0, lo.reshape((3,) + (1,) * np.ndim(x)), hi.reshape((3,) + (1,) * np.ndim(x)))
    return initial


def _riemann_exact(left, right, x0):
    def exact(model, t):
        solution = RiemannSolution.solve(left, right, model.gamma)
        return lambda x: solution.conservative(x, t, x0)
    return exact


def _shu_osher_initial(model):
    left = model.conservative(*SHU_OSHER_POST_SHOCK)

    def u0(x):
        right = model.conservative(1.0 + 0.2 * np.sin(5.0 * x), np.zeros_like(x), np.ones_like(x))
        return np.where(x < -4.0, left.reshape((3,) + (1,) * np.ndim(x)), right)
    return u0


def _shu_osher_boundary(model):
    """Estado pós-choque constante à esquerda; saída livre à direita."""
    inflow = SideCondition.of("inflow", model.conservative(*SHU_OSHER_POST_SHOCK))
    return BoundarySpec(inflow, SideCondition.of("outflow"))


def _blast_initial(model):
    def u0(x):
        p = np.where(x < 0.1, 1000.0, np.where(x < 0.9, 0.01, 100.0))
        return model.conservative(np.ones_like(x), np.zeros_like(x), p)
    return u0


def _dmr_boundary(model):
    inflow = SideCondition.of("inflow", euler2d_conservative(*DMR_POST_SHOCK, model.gamma))
    return BoundarySpec(inflow, SideCondition.of("outflow"),
                        SideCondition.of("dmr_bottom"), SideCondition.of("dmr_top"))


def _dmr_initial(model):
    post = euler2d_conservative(*DMR_POST_SHOCK, model.gamma)
    pre = euler2d_conservative(*DMR_PRE_SHOCK, model.gamma)

    def u0(x, y):
        behind = x < dmr_shock_x(y, 0.0)
        return np.where(behind, post.reshape((4,) + (1,) * x.ndim), pre.reshape((4,) + (1,) * x.ndim))
    return u0


STEP_CORNER = (0.6, 0.2)


def _step_boundary(model):
    inflow = SideCondition.of("inflow", model.conservative(1.4, 3.0, 1.0, 0.0))
    wall = SideCondition.of("reflective")
    return BoundarySpec(inflow, SideCondition.of("outflow"), wall, wall, step_corner=STEP_CORNER)


def _step_initial(model):
    state = model.conservative(1.4, 3.0, 1.0, 0.0)
    return lambda x, y: np.broadcast_to(state.reshape((4,) + (1,) * x.ndim), (4,) + x.shape).copy()


LAX_LEFT, LAX_RIGHT = (0.445, 0.698, 3.528), (0.5, 0.0, 0.571)
SOD_LEFT, SOD_RIGHT = (1.0, 0.0, 1.0), (0.125, 0.0, 0.1)

PROBLEMS = {}


def register(spec):
    PROBLEMS[spec.name] = spec
    return spec


register(ProblemSpec(
    "burgers1d", "Burgers 1D suave", "burgers1d", (0.0, 2.0), (80,), 0.5 / math.pi,
    _periodic(1), lambda model: BURGERS_DATA,
    exact=lambda model, t: burgers1d_exact(BURGERS_DATA, t), smooth=True,
))
register(ProblemSpec(
    "euler1d", "Euler 1D, onda de densidade", "euler1d", (0.0, 2.0), (80,), 2.0,
    _periodic(1), lambda model: euler1d_advection_exact(model, 0.0),
    exact=euler1d_advection_exact, smooth=True,
))
register(ProblemSpec(
    "burgers2d", "Burgers 2D suave", "burgers2d", (0.0, 4.0, 0.0, 4.0), (80, 80), 0.5 / math.pi,
    _periodic(2), lambda model: burgers2d_exact(BURGERS_DATA, 0.0),
    exact=lambda model, t: burgers2d_exact(BURGERS_DATA, t), smooth=True,
))
register(ProblemSpec(
    "euler2d", "Euler 2D, onda de densidade diagonal", "euler2d", (0.0, 2.0, 0.0, 2.0), (80, 80), 2.0,
    _periodic(2), lambda model: euler2d_advection_exact(model, 0.0),
    exact=euler2d_advection_exact, smooth=True,
))
register(ProblemSpec(
    "burgers1d_shock", "Burgers 1D com choque", "burgers1d", (0.0, 2.0), (80,), 1.5 / math.pi,
    _periodic(1), lambda model: BURGERS_DATA,
    exact=lambda model, t: burgers1d_exact(BURGERS_DATA, t),
))
register(ProblemSpec(
    "lax", "Tubo de choque de Lax", "euler1d", (-0.5, 0.5), (200,), 0.16,
    _outflow, _riemann_initial(LAX_LEFT, LAX_RIGHT, 0.0), exact=_riemann_exact(LAX_LEFT, LAX_RIGHT, 0.0),
))
register(ProblemSpec(
    "shu_osher", "Interação choque-entropia", "euler1d", (-5.0, 5.0), (400,), 1.8,
    _shu_osher_boundary, _shu_osher_initial,
))
register(ProblemSpec(
    "blast", "Interação de duas ondas de explosão", "euler1d", (0.0, 1.0), (800,), 0.038,
    _reflective, _blast_initial,
))
register(ProblemSpec(
    "burgers2d_shock", "Burgers 2D com choque", "burgers2d", (0.0, 4.0, 0.0, 4.0), (80, 80), 1.5 / math.pi,
    _periodic(2), lambda model: burgers2d_exact(BURGERS_DATA, 0.0),
    exact=lambda model, t: burgers2d_exact(BURGERS_DATA, t),
))
register(ProblemSpec(
    "dmr", "Dupla reflexão de Mach", "euler2d", (0.0, 4.0, 0.0, 1.0), (480, 120), 0.2,
    _dmr_boundary, _dmr_initial, contours=(1.5, 22.7, 30),
))
register(ProblemSpec(
    "step", "Degrau frontal a Mach 3", "euler2d", (0.0, 3.0, 0.0, 1.0), (240, 80), 4.0,
    _step_boundary, _step_initial, contours=(0.32, 6.15, 30),
))

SOD = ProblemSpec(
    "sod", "Tubo de choque de Sod", "euler1d", (0.0, 1.0), (200,), 0.2,
    _outflow, _riemann_initial(SOD_LEFT, SOD_RIGHT, 0.5), exact=_riemann_exact(SOD_LEFT, SOD_RIGHT, 0.5),
)


def get_problem(name):
    """ProblemSpec registado com esse nome (o tubo de Sod também é aceite)."""
    if name == SOD.name:
        return SOD
    try:
        return PROBLEMS[name]
    except KeyError:
        known = ", ".join(sorted(PROBLEMS))
        raise ConfigurationError(f"Problema desconhecido: {name} (registados: {known})") from None


def problem_names():
    return list(PROBLEMS)
