# actions/reference_actions.py

"""
Este módulo contém o mixin ReferenceActions, responsável por comparar uma
solução 1D com uma solução de referência.

As suas responsabilidades incluem:
- Restringir uma referência de malha mais fina às células da solução,
  pela média exata da reconstrução constante por células.
- Calcular as normas L1 (média nas células) e L-infinito das diferenças.
- Obter a referência de um ficheiro ou, na falta deste, das médias exatas
  do problema (por exemplo, o solver de Riemann exato para o tubo de Lax).
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
import logging

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError
from components.moments import init_moments
from .output_actions import read_solution_1d

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellAverages:
    """Médias (n_vars, n) numa malha uniforme de [x_lo, x_hi]."""

    x_lo: float
    x_hi: float
    values: np.ndarray

    @property
    def n_cells(self):
        return self.values.shape[-1]

    @classmethod
    def from_field(cls, grid, field):
        return cls(grid.x_lo, grid.x_hi, field.u_bar[:, grid.interior].copy())

    @classmethod
    def from_file(cls, path):
        x_lo, x_hi, _, values = read_solution_1d(path)
        return cls(x_lo, x_hi, values)


@dataclass(frozen=True)
class ErrorNorms:
    l1: float
    linf: float


def error_norms(a, b, mask=None):
    """L1 como média de |a - b| (malha uniforme) e L-infinito como máximo."""
    diff = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))
    if mask is not None:
        diff = diff[mask]
    return ErrorNorms(float(np.mean(diff)), float(np.max(diff)))


def restrict_averages(reference, x_lo, x_hi, n_cells):
    """
    Médias da referência nas `n_cells` células de [x_lo, x_hi].

    :raises ConfigurationError: domínios diferentes ou referência mais grossa.
    """
    length = x_hi - x_lo
    tol = 1e-12 * max(1.0, abs(length))
    if abs(reference.x_lo - x_lo) > tol or abs(reference.x_hi - x_hi) > tol:
        raise ConfigurationError(
            f"Domínio da referência [{reference.x_lo}, {reference.x_hi}] difere de [{x_lo}, {x_hi}]")
    if reference.n_cells < n_cells:
        raise ConfigurationError("A referência tem de estar numa malha pelo menos tão fina como a solução")
    fine_edges = np.linspace(0.0, 1.0, reference.n_cells + 1)
    coarse_edges = np.linspace(0.0, 1.0, n_cells + 1)
    cumulative = np.concatenate(
        [np.zeros((reference.values.shape[0], 1)), np.cumsum(reference.values, axis=-1) / reference.n_cells],
        axis=-1)
    integral = np.stack([np.interp(coarse_edges, fine_edges, c) for c in cumulative])
    return np.diff(integral, axis=-1) * n_cells


def compare_to_reference(solution, reference, variable=0):
    """
    Normas do erro da variável `variable` da solução face à referência restringida.

    :param solution, reference: CellAverages no mesmo domínio.
    """
    restricted = restrict_averages(reference, solution.x_lo, solution.x_hi, solution.n_cells)
    return error_norms(solution.values[variable], restricted[variable])


def exact_cell_averages(problem, model, grid, t):
    """Médias exatas por quadratura de Gauss de 5 pontos por célula (e direção)."""
    return init_moments(problem.exact_solution(model, t), grid).u_bar


class ReferenceActions:
    """
    Mixin que compara a solução de uma execução com uma referência.
    """

    def carregar_referencia(self, path):
        """Referência pedida explicitamente: um ficheiro em falta é um erro."""
        try:
            return CellAverages.from_file(path)
        except FileNotFoundError:
            raise ConfigurationError(f"Ficheiro de referência não encontrado: {path}") from None

    def comparar_solucao(self, problem, model, grid, field, t, reference_path=None):
        """
        Compara `field` com a referência do ficheiro ou com as médias exatas do problema.

        :return: ErrorNorms da primeira variável (densidade para Euler).
        """
        solution = CellAverages.from_field(grid, field)
        if reference_path is not None:
            norms = compare_to_reference(solution, self.carregar_referencia(reference_path))
            origem = str(reference_path)
        else:
            if not problem.has_exact:
                raise ConfigurationError(f"O problema {problem.name} precisa de um ficheiro de referência")
            exact = exact_cell_averages(problem, model, grid, t)
            norms = error_norms(solution.values[0], exact[0, grid.interior])
            origem = "solução exata"
        logger.info("Erro face a %s: L1=%.3e, Linf=%.3e", origem, norms.l1, norms.linf)
        return norms
