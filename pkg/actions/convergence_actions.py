# actions/convergence_actions.py

"""
Este módulo contém o mixin ConvergenceActions, responsável pelos estudos de
convergência em malhas uniformes.

As suas responsabilidades incluem:
- Resolver o problema em cada malha e medir os erros L1 e L-infinito das
  médias face às médias exatas (densidade no caso de Euler).
- Calcular as ordens observadas entre linhas consecutivas,
  log(e_prev/e)/log(N/N_prev), e a ordem global por ajuste log-log.
- Formatar a tabela de erros e ordens.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass, field
import logging
import time

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError
from solver_core import HwenoSolver
from .reference_actions import error_norms, exact_cell_averages

logger = logging.getLogger(__name__)


@dataclass
class ConvergenceRow:
    cells: int
    l1: float
    linf: float
    wall_time: float
    l1_order: float | None = None
    linf_order: float | None = None


@dataclass
class ConvergenceReport:
    problem: str
    mode: str
    rows: list = field(default_factory=list)

    def add(self, row):
        """Acrescenta uma linha e calcula as ordens face à anterior."""
        if self.rows:
            prev = self.rows[-1]
            scale = np.log(row.cells / prev.cells)
            row.l1_order = _order(prev.l1, row.l1, scale)
            row.linf_order = _order(prev.linf, row.linf, scale)
        self.rows.append(row)
        return row

    def fitted_order(self, norm="l1"):
        """Declive do ajuste de mínimos quadrados de log(erro) contra log(h)."""
        if len(self.rows) < 2:
            return None
        h = np.array([1.0 / r.cells for r in self.rows])
        err = np.array([getattr(r, norm) for r in self.rows])
        if np.any(err <= 0.0):
            return None
        return float(np.polyfit(np.log(h), np.log(err), 1)[0])

    def format_table(self):
        lines = [f"# {self.problem} ({self.mode})",
                 f"{'N':>6} {'L1 error':>12} {'order':>6} {'Linf error':>12} {'order':>6}"]
        for r in self.rows:
            lines.append(f"{r.cells:>6d} {r.l1:>12.2E} {_fmt(r.l1_order):>6} "
                         f"{r.linf:>12.2E} {_fmt(r.linf_order):>6}")
        return "\n".join(lines) + "\n"

    def as_dict(self):
        return {
            "problem": self.problem,
            "mode": self.mode,
            "rows": [vars(r) for r in self.rows],
            "fitted_l1_order": self.fitted_order("l1"),
        }


def _order(prev, cur, scale):
    if prev <= 0.0 or cur <= 0.0:
        return None
    return float(np.log(prev / cur) / scale)


def _fmt(order):
    return "" if order is None else f"{order:.2f}"


class ConvergenceActions:
    """
    Mixin que corre estudos de convergência sobre um ProblemSpec.
    """

    def run_convergence(self, problem, meshes, config):
        """
        Erros e ordens em cada malha.

        :param meshes: números de células (por direção) estritamente crescentes.
        :param config: RunConfig com o modo do esquema e o modo do passo.
        :raises ConfigurationError: problema sem solução exata.
        """
        if not problem.has_exact:
            raise ConfigurationError(f"O problema {problem.name} não tem solução exata para convergência")
        meshes = list(meshes)
        if any(b <= a for a, b in zip(meshes, meshes[1:])):
            raise ConfigurationError(f"As malhas têm de ser crescentes: {meshes}")
        scheme = config.scheme_mode()
        final_time = config.final_time or problem.final_time
        report = ConvergenceReport(problem.name, scheme.kind.value)
        for n in meshes:
            model = problem.make_model()
            grid = problem.make_grid(n)
            solver = HwenoSolver(grid, problem.make_boundary(model), model, scheme,
                                 seed=config.seed, positivity_check=config.positivity_check)
            start = time.perf_counter()
            result = solver.solve(solver.initial_field(problem.initial_condition(model)), final_time,
                                  dt_mode=config.dt_mode or "accuracy", progress=config.progress)
            exact = exact_cell_averages(problem, model, grid, result.t)
            region = (0,) + ((grid.interior,) if grid.dim == 1 else grid.interior)
            norms = error_norms(result.field.u_bar[region], exact[region])
            row = report.add(ConvergenceRow(n, norms.l1, norms.linf, time.perf_counter() - start))
            logger.info("N=%d: L1=%.2E (ordem %s), Linf=%.2E (ordem %s)", n, row.l1, _fmt(row.l1_order),
                        row.linf, _fmt(row.linf_order))
        return report
