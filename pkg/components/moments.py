# components/moments.py

"""
Armazenamento da solução por momentos e a sua inicialização.

Cada célula guarda, para cada variável conservada, o momento de ordem zero
(média na célula) e os momentos de primeira ordem ponderados pelo afastamento
normalizado ao centro, (x - x_i)/dx e (y - y_j)/dy.

Layout dos arrays: `(n_vars, NX)` em 1D e `(n_vars, NX, NY)` em 2D, com as
células fantasma incluídas nas extensões espaciais.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from .errors import ConfigurationError, NumericalStateError


@dataclass
class MomentField:
    """
    Momentos de todas as variáveis conservadas em todas as células.

    Suporta a aritmética linear usada pelo Runge-Kutta (`a * campo + b * campo`),
    de modo que os estágios combinam campos inteiros, fantasmas incluídos.
    """

    u_bar: np.ndarray
    v_bar: np.ndarray
    w_bar: np.ndarray | None = None

    @property
    def dim(self):
        return self.u_bar.ndim - 1

    @property
    def n_vars(self):
        return self.u_bar.shape[0]

    def arrays(self):
        """Tupla dos arrays de momentos presentes (u, v e, em 2D, w)."""
        if self.w_bar is None:
            return (self.u_bar, self.v_bar)
        return (self.u_bar, self.v_bar, self.w_bar)

    def copy(self):
        return MomentField(*(a.copy() for a in self.arrays()))

    def is_finite(self):
        return all(np.isfinite(a).all() for a in self.arrays())

    def require_finite(self, contexto=""):
        """Levanta NumericalStateError se algum momento não for finito."""
        if not self.is_finite():
            raise NumericalStateError(f"Momentos não finitos {contexto}".strip())

    @classmethod
    def zeros(cls, n_vars, shape):
        """Campo nulo com `n_vars` variáveis numa malha de extensão `shape`."""
        full = (n_vars,) + tuple(shape)
        w = np.zeros(full) if len(shape) == 2 else None
        return cls(np.zeros(full), np.zeros(full), w)

    # --- Aritmética linear para os estágios Runge-Kutta ---
    def __add__(self, other):
        if not isinstance(other, MomentField):
            return NotImplemented
        return MomentField(*(a + b for a, b in zip(self.arrays(), other.arrays())))

    def __sub__(self, other):
        if not isinstance(other, MomentField):
            return NotImplemented
        return MomentField(*(a - b for a, b in zip(self.arrays(), other.arrays())))

    def __mul__(self, scalar):
        if isinstance(scalar, MomentField):
            return NotImplemented
        return MomentField(*(scalar * a for a in self.arrays()))

    __rmul__ = __mul__


def _promote(values, n_extra_dims):
    """Garante o eixo de variáveis à frente quando u0 devolve um escalar por ponto."""
    values = np.asarray(values, dtype=float)
    if values.ndim == n_extra_dims:
        values = values[np.newaxis]
    return values


def init_moments(u0, grid, quadrature_order=5):
    """
    Calcula os momentos iniciais por quadratura de Gauss-Legendre em cada célula.

    - `u0(x)` em 1D ou `u0(x, y)` em 2D recebe arrays de coordenadas e devolve
      o estado conservado com o eixo de variáveis à frente (ou um escalar por ponto).
    - Em 2D usa-se o produto tensorial da regra 1D.
    - As células fantasma também são preenchidas; `fill_ghosts` sobrepõe-nas depois.

    :param quadrature_order: número de pontos de Gauss por direção (>= 5).
    :return: MomentField com u_bar, v_bar (e w_bar em 2D).
    """
    if quadrature_order < 5:
        raise ConfigurationError("A quadratura inicial precisa de pelo menos 5 pontos")
    nodes, weights = np.polynomial.legendre.leggauss(quadrature_order)
    xi = 0.5 * nodes
    wq = 0.5 * weights

    if grid.dim == 1:
        x = grid.centers[:, None] + xi[None, :] * grid.dx
        vals = _promote(u0(x), 2)
        u_bar = np.einsum("vcq,q->vc", vals, wq)
        v_bar = np.einsum("vcq,q->vc", vals, wq * xi)
        return MomentField(u_bar, v_bar)

    x = grid.centers_x[:, None, None, None] + xi[None, None, :, None] * grid.dx
    y = grid.centers_y[None, :, None, None] + xi[None, None, None, :] * grid.dy
    x, y = np.broadcast_arrays(x, y)
    vals = _promote(u0(x, y), 4)
    w2 = wq[:, None] * wq[None, :]
    u_bar = np.einsum("vijab,ab->vij", vals, w2)
    v_bar = np.einsum("vijab,ab->vij", vals, w2 * xi[:, None])
    w_bar = np.einsum("vijab,ab->vij", vals, w2 * xi[None, :])
    return MomentField(u_bar, v_bar, w_bar)
