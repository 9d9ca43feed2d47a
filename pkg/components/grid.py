# components/grid.py

"""
Geometria das malhas uniformes 1D e 2D.

As malhas guardam apenas a geometria e o número de camadas fantasma; os
arrays da solução vivem em `MomentField`. Todos os índices usados pelo resto
do código incluem as células fantasma: a célula interior `k` fica na posição
`n_ghost + k`.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from .errors import ConfigurationError

MIN_GHOST = 2


@dataclass(frozen=True)
class Grid1:
    """
    Malha uniforme em [x_lo, x_hi] com `n_cells` células interiores.

    Responsabilidades:
    - Validar a geometria (dx > 0, pelo menos duas camadas fantasma).
    - Fornecer os centros das células (com e sem fantasmas) e a fatia interior.
    """

    n_cells: int
    x_lo: float
    x_hi: float
    n_ghost: int = MIN_GHOST

    def __post_init__(self):
        if self.n_cells < 1:
            raise ConfigurationError(f"Número de células inválido: {self.n_cells}")
        if not self.x_hi > self.x_lo:
            raise ConfigurationError(f"Domínio vazio: [{self.x_lo}, {self.x_hi}]")
        if self.n_ghost < MIN_GHOST:
            raise ConfigurationError(f"São necessárias pelo menos {MIN_GHOST} camadas fantasma")

    @property
    def dim(self):
        return 1

    @property
    def dx(self):
        return (self.x_hi - self.x_lo) / self.n_cells

    @property
    def shape(self):
        """Extensão total dos arrays, fantasmas incluídos."""
        return (self.n_cells + 2 * self.n_ghost,)

    @property
    def interior(self):
        """Fatia das células interiores ao longo do eixo espacial."""
        return slice(self.n_ghost, self.n_ghost + self.n_cells)

    @property
    def centers(self):
        """Centros de todas as células, fantasmas incluídos."""
        k = np.arange(self.shape[0]) - self.n_ghost
        return self.x_lo + (k + 0.5) * self.dx

    @property
    def interior_centers(self):
        return self.centers[self.interior]

    @property
    def cell_measure(self):
        return self.dx


@dataclass(frozen=True)
class Grid2:
    """
    Malha cartesiana uniforme em [x_lo, x_hi] x [y_lo, y_hi].

    O primeiro eixo espacial dos arrays é x (índice i), o segundo é y (índice j).
    """

    nx: int
    ny: int
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    n_ghost: int = MIN_GHOST

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ConfigurationError(f"Malha inválida: {self.nx} x {self.ny}")
        if not (self.x_hi > self.x_lo and self.y_hi > self.y_lo):
            raise ConfigurationError("Domínio 2D vazio")
        if self.n_ghost < MIN_GHOST:
            raise ConfigurationError(f"São necessárias pelo menos {MIN_GHOST} camadas fantasma")

    @property
    def dim(self):
        return 2

    @property
    def dx(self):
        return (self.x_hi - self.x_lo) / self.nx

    @property
    def dy(self):
        return (self.y_hi - self.y_lo) / self.ny

    @property
    def shape(self):
        return (self.nx + 2 * self.n_ghost, self.ny + 2 * self.n_ghost)

    @property
    def interior(self):
        """Par de fatias (x, y) das células interiores."""
        g = self.n_ghost
        return (slice(g, g + self.nx), slice(g, g + self.ny))

    @property
    def centers_x(self):
        k = np.arange(self.shape[0]) - self.n_ghost
        return self.x_lo + (k + 0.5) * self.dx

    @property
    def centers_y(self):
        k = np.arange(self.shape[1]) - self.n_ghost
        return self.y_lo + (k + 0.5) * self.dy

    def mesh(self):
        """Centros em malha (indexação 'ij'), fantasmas incluídos."""
        return np.meshgrid(self.centers_x, self.centers_y, indexing="ij")

    @property
    def cell_measure(self):
        return self.dx * self.dy
