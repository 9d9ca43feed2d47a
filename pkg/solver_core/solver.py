# solver_core/solver.py

"""
HwenoSolver: composição dos mixins do núcleo numérico.

Pipeline de cada estágio RK: preencher fantasmas -> marcar células (no
primeiro estágio, ou em todos se configurado) -> modificar os primeiros
momentos nas células marcadas -> reconstruir -> fluxos -> lado direito.
"""

# --- Imports da Biblioteca Padrão ---
import logging

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.boundary import fill_ghosts, obstacle_mask
from components.errors import ConfigurationError
from components.moments import init_moments
from physics.flux import wavespeed_bound
from .indicator import IndicatorMixin
from .limiter import modify_troubled_1d, modify_troubled_2d
from .rhs_1d import rhs_1d
from .rhs_2d import rhs_2d
from .scheme import GammaChoice, SchemeMode
from .time_stepping import TimeSteppingMixin

logger = logging.getLogger(__name__)


class HwenoSolver(IndicatorMixin, TimeSteppingMixin):
    """
    Resolve uma lei de conservação numa malha com o esquema HWENO híbrido.

    Responsabilidades:
    - Guardar malha, fronteiras, modelo, modo do esquema e máscaras do sólido.
    - Preparar cada estágio (marcação e modificação dos momentos).
    - Avaliar o lado direito semi-discreto em 1D ou 2D.
    """

    def __init__(self, grid, bc, model, scheme=None, *, seed=None, positivity_check=True):
        """
        :param scheme: SchemeMode (por omissão: híbrido, pesos por omissão, CFL 0.6).
        :param seed: semente do gerador usado pelos pesos lineares aleatórios.
        :param positivity_check: conta os pontos reconstruídos com rho ou p não positivos.
        """
        if model.dim != grid.dim:
            raise ConfigurationError(f"Modelo {model.name} ({model.dim}D) numa malha {grid.dim}D")
        bc.validate(grid.dim, model.n_vars)
        self.grid = grid
        self.bc = bc
        self.model = model
        self.scheme = scheme or SchemeMode()
        if self.scheme.gamma == GammaChoice.RANDOM and seed is None:
            raise ConfigurationError("Pesos lineares aleatórios precisam de uma semente")
        self.rng = np.random.default_rng(seed)

        mask = obstacle_mask(grid, bc)
        self.solid_mask = None if mask is None else mask[grid.interior]
        self.fluid_mask = None if mask is None else ~self.solid_mask

        self.diagnostics = {} if positivity_check else None
        self.last_trouble = None
        self._trouble = None
        self._speeds = None
        self.gamma, self.gamma_modify = self.scheme.linear_weights(grid.dim, self.rng)

    def initial_field(self, u0):
        """Momentos iniciais de u0 por quadratura."""
        return init_moments(u0, self.grid)

    # --- Preparação de cada passo e estágio ---
    def begin_step(self, field, t):
        """Sorteia pesos aleatórios e, se pedido, fixa as velocidades LF do passo."""
        if self.scheme.gamma == GammaChoice.RANDOM:
            self.gamma, self.gamma_modify = self.scheme.linear_weights(self.grid.dim, self.rng)
        self._speeds = None if self.scheme.alpha_per_stage else self._lf_speeds(field)

    def _lf_speeds(self, field):
        region = (slice(None),) + ((self.grid.interior,) if self.grid.dim == 1 else self.grid.interior)
        states = field.u_bar[region]
        if self.solid_mask is not None:
            states = states[:, ~self.solid_mask]
        return tuple(wavespeed_bound(states, self.model, axis) for axis in range(self.grid.dim))

    def prepare_stage(self, field, t, stage):
        """Campo com fantasmas preenchidos e momentos modificados nas células marcadas."""
        filled = fill_ghosts(field, self.grid, self.bc, t, self.model)
        if stage == 0 or self.scheme.reflag_each_stage or self._trouble is None:
            self._trouble = self.mark_troubled_cells(filled, t)
            if stage == 0:
                self.last_trouble = self._trouble
        modify = modify_troubled_1d if self.grid.dim == 1 else modify_troubled_2d
        return modify(filled, self.grid, self.model, self._trouble, self.gamma_modify, self.scheme.epsilon)

    def evaluate_rhs(self, field, t):
        speeds = self._speeds or (None, None)
        if self.grid.dim == 1:
            return rhs_1d(field, self.grid, self.bc, self.model, self._trouble, t,
                          alpha=speeds[0], gamma=self.gamma, eps=self.scheme.epsilon,
                          diagnostics=self.diagnostics)
        return rhs_2d(field, self.grid, self.bc, self.model, self._trouble, t,
                      alpha=speeds[0], beta=speeds[1], gamma=self.gamma, eps=self.scheme.epsilon,
                      solid=self.solid_mask, diagnostics=self.diagnostics)

    def solve(self, field, final_time, t=0.0, dt_mode="production", progress=False, max_steps=None):
        """Integra até `final_time` e regista o resumo no log."""
        logger.info("A integrar %s até t=%.6g (%s, modo %s)", self.model.name, final_time,
                    "x".join(str(s - 2 * self.grid.n_ghost) for s in self.grid.shape), self.scheme.kind.value)
        result = self.advance(field, final_time, t, dt_mode, progress, max_steps)
        logger.info("Concluído em %d passos (%.2f s); fração média de células marcadas %.2f%%",
                    result.steps, result.wall_time, 100.0 * result.mean_flagged_fraction)
        return result
