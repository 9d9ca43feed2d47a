# solver_core/time_stepping.py

"""
Integração no tempo: Runge-Kutta TVD de terceira ordem e passo CFL.

    u1 = u + dt L(u)
    u2 = 3/4 u + 1/4 u1 + 1/4 dt L(u1)
    u' = 1/3 u + 2/3 u2 + 2/3 dt L(u2)

Cada estágio passa primeiro pelo `limiter` (fantasmas, marcação e
modificação dos momentos) e só depois pelo operador L.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass, field as dc_field
import logging
import time

# --- Imports de Terceiros ---
import numpy as np
from tqdm import tqdm

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError, NumericalStateError
from physics.flux import wavespeed_bound

logger = logging.getLogger(__name__)

# (peso de u^n, peso do estágio anterior, fator de dt, fração de dt no tempo do estágio)
RK3_STAGES = (
    (0.0, 1.0, 1.0, 0.0),
    (0.75, 0.25, 0.25, 1.0),
    (1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 0.5),
)

DT_MODES = ("production", "accuracy")


def _finite(state):
    if hasattr(state, "is_finite"):
        return state.is_finite()
    return bool(np.all(np.isfinite(state)))


def step_rk3(field, dt, rhs_operator, limiter=None, t=0.0):
    """
    Avança um passo TVD-RK3.

    :param rhs_operator: função (campo, t) -> derivada temporal.
    :param limiter: função opcional (campo, t, estágio) -> campo preparado.
    :return: campo em t + dt.
    """
    if not dt > 0:
        raise ConfigurationError(f"O passo de tempo tem de ser positivo (recebido {dt})")
    base = None
    current = field
    for stage, (a_n, a_prev, a_dt, c) in enumerate(RK3_STAGES):
        t_stage = t + c * dt
        if limiter is not None:
            current = limiter(current, t_stage, stage)
        if base is None:
            base = current
        rate = rhs_operator(current, t_stage)
        if stage == 0:
            update = current + dt * rate
        else:
            update = a_n * base + a_prev * current + (a_dt * dt) * rate
        if not _finite(update):
            raise NumericalStateError(f"Valores não finitos após o estágio {stage + 1} do RK3 (t={t:.6g})")
        current = update
    return current


def compute_dt(field, grid, model, cfl, mode="production", t=0.0, final_time=None, solid=None):
    """
    Passo CFL a partir das médias interiores.

    - production: dt = cfl / (alpha/dx) em 1D e cfl / (alpha/dx + beta/dy) em 2D;
    - accuracy: o mesmo multiplicado por h^(2/3), h o menor espaçamento,
      o que dá dt proporcional a h^(5/3).

    O passo é truncado para não ultrapassar `final_time`.
    """
    if mode not in DT_MODES:
        raise ConfigurationError(f"Modo de passo desconhecido: {mode}")
    if not cfl > 0:
        raise ConfigurationError(f"CFL tem de ser positivo (recebido {cfl})")
    states = field.u_bar[(slice(None),) + ((grid.interior,) if grid.dim == 1 else grid.interior)]
    if solid is not None:
        states = states[:, ~solid]
    rate = wavespeed_bound(states, model, 0) / grid.dx
    h = grid.dx
    if grid.dim == 2:
        rate += wavespeed_bound(states, model, 1) / grid.dy
        h = min(grid.dx, grid.dy)

    remaining = None if final_time is None else final_time - t
    if rate == 0.0:
        if remaining is None:
            raise ConfigurationError("Velocidade de onda nula e sem tempo final para limitar o passo")
        return remaining
    dt = cfl / rate
    if mode == "accuracy":
        dt *= h ** (2.0 / 3.0)
    if remaining is not None and dt >= remaining:
        return remaining
    return dt


@dataclass
class RunResult:
    """Estado final e histórico de uma integração."""

    field: object
    t: float
    steps: int = 0
    flag_history: list = dc_field(default_factory=list)
    nonphysical_points: int = 0
    wall_time: float = 0.0

    @property
    def mean_flagged_fraction(self):
        return float(np.mean([f for _, f in self.flag_history])) if self.flag_history else 0.0

    @property
    def max_flagged_fraction(self):
        return float(np.max([f for _, f in self.flag_history])) if self.flag_history else 0.0


class TimeSteppingMixin:
    """
    Mixin com o ciclo de integração até ao tempo final.

    Espera no objeto: `grid`, `model`, `scheme`, `solid_mask`, `prepare_stage`,
    `evaluate_rhs`, `begin_step`, `last_trouble` e `diagnostics` (dicionário ou None).
    """

    def _nonphysical_count(self):
        return 0 if self.diagnostics is None else self.diagnostics.get("nonphysical_points", 0)

    def advance(self, field, final_time, t=0.0, dt_mode="production", progress=False, max_steps=None):
        """
        Integra de `t` até `final_time`.

        :param max_steps: limite opcional de passos (para ensaios curtos).
        :return: RunResult com o campo final e o histórico das marcas.
        """
        if not final_time > t:
            raise ConfigurationError(f"Tempo final {final_time} não é posterior a t={t}")
        result = RunResult(field, t)
        start = time.perf_counter()
        bar = tqdm(total=final_time - t, disable=not progress, unit="t", leave=False)
        warned = False
        try:
            while result.t < final_time and (max_steps is None or result.steps < max_steps):
                dt = compute_dt(result.field, self.grid, self.model, self.scheme.cfl, dt_mode,
                                result.t, final_time, self.solid_mask)
                self.begin_step(result.field, result.t)
                before = self._nonphysical_count()
                try:
                    result.field = step_rk3(result.field, dt, self.evaluate_rhs, self.prepare_stage, result.t)
                except NumericalStateError as exc:
                    raise NumericalStateError(f"{exc} no passo {result.steps + 1}") from exc
                result.t = final_time if final_time - (result.t + dt) <= 1e-13 * max(1.0, abs(final_time)) else result.t + dt
                result.steps += 1
                fraction = self.last_trouble.fraction if self.last_trouble is not None else 0.0
                result.flag_history.append((result.t, fraction))
                hits = self._nonphysical_count() - before
                if hits and not warned:
                    logger.warning("Pontos com densidade ou pressão não positivas no passo %d (t=%.6g)",
                                   result.steps, result.t)
                    warned = True
                logger.debug("passo %d: dt=%.3e, t=%.6g, marcadas %.2f%%", result.steps, dt, result.t,
                             100.0 * fraction)
                bar.update(dt)
        finally:
            bar.close()
        result.nonphysical_points = self._nonphysical_count()
        result.wall_time = time.perf_counter() - start
        return result
