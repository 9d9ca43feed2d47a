# actions/benchmark_actions.py

"""
Este módulo contém o mixin BenchmarkActions, responsável pelas execuções
dos problemas com choques.

As suas responsabilidades incluem:
- Resolver o problema até ao tempo final e registar a fração de células
  marcadas em cada passo.
- Escrever a solução final (tabela 1D ou grelhas 2D de densidade e marcas),
  os níveis de contorno, o histórico das marcas e o resumo da execução.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
import logging

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.boundary import fill_ghosts
from solver_core import HwenoSolver

logger = logging.getLogger(__name__)


@dataclass
class BenchmarkResult:
    problem: object
    model: object
    grid: object
    solver: object
    run: object
    final_flags: np.ndarray
    files: list

    def summary(self):
        cells = [self.grid.n_cells] if self.grid.dim == 1 else [self.grid.nx, self.grid.ny]
        return {
            "problem": self.problem.name,
            "mode": self.solver.scheme.kind.value,
            "gamma": self.solver.scheme.gamma.value,
            "cells": cells,
            "final_time": self.run.t,
            "steps": self.run.steps,
            "mean_flagged_fraction": self.run.mean_flagged_fraction,
            "max_flagged_fraction": self.run.max_flagged_fraction,
            "nonphysical_points": self.run.nonphysical_points,
        }


class BenchmarkActions:
    """
    Mixin que corre um problema completo e escreve os resultados.

    Espera `self.config` (RunConfig) e os métodos de escrita de OutputActions.
    """

    def run_benchmark(self, problem, config, write=True):
        """
        Resolve `problem` na malha da configuração (ou na malha por omissão do problema).

        :return: BenchmarkResult com o estado final, as marcas finais e os ficheiros escritos.
        """
        model = problem.make_model()
        grid = problem.make_grid(config.cells, config.cells_y)
        solver = HwenoSolver(grid, problem.make_boundary(model), model, config.scheme_mode(),
                             seed=config.seed, positivity_check=config.positivity_check)
        field = solver.initial_field(problem.initial_condition(model))
        run = solver.solve(field, config.final_time or problem.final_time,
                           dt_mode=config.dt_mode or "production", progress=config.progress)
        final = solver.mark_troubled_cells(fill_ghosts(run.field, grid, solver.bc, run.t, model), run.t)
        result = BenchmarkResult(problem, model, grid, solver, run, final.troubled, [])
        if run.nonphysical_points:
            logger.warning("%d pontos reconstruídos com densidade ou pressão não positivas",
                           run.nonphysical_points)
        if write:
            result.files = self.escrever_benchmark(result)
        return result

    def escrever_benchmark(self, result):
        name, grid = result.problem.name, result.grid
        files = []
        if grid.dim == 1:
            files.append(self.escrever_solucao_1d(f"{name}_solution.dat", grid, result.run.field,
                                                  result.model, result.final_flags))
        else:
            var = "rho" if result.model.is_system else "u"
            values = result.run.field.u_bar[(0,) + grid.interior]
            files.append(self.escrever_grelha_2d(f"{name}_{var}.grid", grid, values, var))
            files.append(self.escrever_grelha_2d(f"{name}_flags.grid", grid,
                                                 result.final_flags.astype(float), "flag"))
            if result.problem.contours is not None:
                files.append(self.escrever_contornos(f"{name}_contours.txt", result.problem.contours))
        files.append(self.escrever_historico(f"{name}_flag_history.dat", result.run.flag_history))
        files.append(self.escrever_resumo(result.summary()))
        return files
