# physics/equations.py

"""
Modelos de equações: Burgers e Euler, em 1D e 2D.

Convenção de arrays: o estado `q` tem o eixo das variáveis à frente,
`(n_vars, ...)`, e todos os métodos são vetorizados nos eixos restantes.
Os sistemas próprios devolvem matrizes empilhadas `(..., n_vars, n_vars)`.

Para Euler as variáveis conservadas são (rho, rho*u, E) em 1D e
(rho, rho*u, rho*v, E) em 2D, com gás ideal p = (gamma - 1)(E - rho|u|^2/2).
"""

# --- Imports da Biblioteca Padrão ---
from abc import ABC, abstractmethod

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError, NumericalStateError


class EquationModel(ABC):
    """
    Interface comum dos modelos de leis de conservação.

    Responsabilidades:
    - Fluxos físicos por direção.
    - Raio espectral do Jacobiano (velocidades de onda).
    - Sistema característico (L, R) com L = R^-1.
    - Metadados usados pelas fronteiras e pelo indicador de células problemáticas.
    """

    name = "modelo"
    dim = 1
    n_vars = 1

    @property
    def is_system(self):
        return self.n_vars > 1

    @abstractmethod
    def flux(self, q, axis=0):
        """Fluxo físico na direção `axis` (0 = x, 1 = y)."""

    def flux_x(self, q):
        return self.flux(q, 0)

    def flux_y(self, q):
        return self.flux(q, 1)

    @abstractmethod
    def spectral_radius(self, q, axis=0):
        """|f'(q)| por ponto na direção `axis`."""

    def eigensystem(self, q, axis=0):
        """Matrizes (L, R) empilhadas no estado `q`; identidade para escalares."""
        shape = np.shape(q)[1:] + (1, 1)
        eye = np.ones(shape)
        return eye, eye

    def interface_eigensystem(self, u_left, u_right, axis=0):
        """
        Sistema característico (L, R) na média aritmética dos estados dos dois lados de uma aresta.

        :raises NumericalStateError: se a média não for um estado admissível.
        """
        avg = 0.5 * (np.asarray(u_left, dtype=float) + np.asarray(u_right, dtype=float))
        self.check_physical(avg, "na média da interface")
        return self.eigensystem(avg, axis)

    @abstractmethod
    def velocity(self, q, axis=0):
        """Velocidade de transporte usada para decidir as arestas de entrada do indicador."""

    def indicator_variables(self):
        """Índices das variáveis vigiadas pelo indicador KXRCF."""
        return (0,)

    def normal_momentum_index(self, axis):
        """Índice do momento normal a uma parede perpendicular a `axis` (None para escalares)."""
        return None

    def check_physical(self, q, contexto=""):
        """Levanta NumericalStateError se o estado não for admissível."""
        if not np.all(np.isfinite(q)):
            raise NumericalStateError(f"Estado não finito {contexto}".strip())


class Burgers1D(EquationModel):
    """u_t + (u^2/2)_x = 0."""

    name = "burgers1d"

    def flux(self, q, axis=0):
        return 0.5 * q * q

    def spectral_radius(self, q, axis=0):
        return np.abs(q[0])

    def velocity(self, q, axis=0):
        return q[0]


class Burgers2D(Burgers1D):
    """u_t + (u^2/2)_x + (u^2/2)_y = 0."""

    name = "burgers2d"
    dim = 2


class Euler1D(EquationModel):
    """Equações de Euler 1D para gás ideal."""

    name = "euler1d"
    n_vars = 3

    def __init__(self, gamma=1.4):
        if gamma <= 1.0:
            raise ConfigurationError(f"gamma tem de ser > 1 (recebido {gamma})")
        self.gamma = gamma

    # --- Conversões ---
    def pressure(self, q):
        rho, mom, energy = q[0], q[1], q[-1]
        kinetic = 0.5 * mom * mom
        if self.dim == 2:
            kinetic = kinetic + 0.5 * q[2] * q[2]
        return (self.gamma - 1.0) * (energy - kinetic / rho)

    def sound_speed(self, q):
        return np.sqrt(self.gamma * self.pressure(q) / q[0])

    def conservative(self, rho, u, p, v=None):
        """Estado conservado a partir das variáveis primitivas (v só em 2D)."""
        rho, u, p = (np.asarray(a, dtype=float) for a in (rho, u, p))
        if self.dim == 1:
            energy = p / (self.gamma - 1.0) + 0.5 * rho * u * u
            return np.stack(np.broadcast_arrays(rho, rho * u, energy))
        v = np.zeros_like(u) if v is None else np.asarray(v, dtype=float)
        energy = p / (self.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
        return np.stack(np.broadcast_arrays(rho, rho * u, rho * v, energy))

    def primitive(self, q):
        """(rho, u, [v,] p) empilhados."""
        rho = q[0]
        vel = [q[k] / rho for k in range(1, self.dim + 1)]
        return np.stack([rho, *vel, self.pressure(q)])

    # --- Fluxos e velocidades ---
    def velocity(self, q, axis=0):
        return q[1 + axis] / q[0]

    def flux(self, q, axis=0):
        p = self.pressure(q)
        vel = self.velocity(q, axis)
        out = q * vel
        out[1 + axis] = out[1 + axis] + p
        out[-1] = out[-1] + p * vel
        return out

    def spectral_radius(self, q, axis=0):
        return np.abs(self.velocity(q, axis)) + self.sound_speed(q)

    def indicator_variables(self):
        return (0, self.n_vars - 1)

    def normal_momentum_index(self, axis):
        return 1 + axis

    def check_physical(self, q, contexto=""):
        super().check_physical(q, contexto)
        if np.any(q[0] <= 0.0) or np.any(self.pressure(q) <= 0.0):
            raise NumericalStateError(f"Densidade ou pressão não positivas {contexto}".strip())

    # --- Sistema característico ---
    def eigensystem(self, q, axis=0):
        return _euler_eigenvectors(np.asarray(q, dtype=float), self.gamma, self.dim, axis)


class Euler2D(Euler1D):
    """Equações de Euler 2D para gás ideal."""

    name = "euler2d"
    dim = 2
    n_vars = 4


def _euler_eigenvectors(q, gamma, dim, axis):
    """
    Vetores próprios analíticos do Jacobiano de Euler no estado `q`.

    Em 2D a direção y obtém-se trocando os papéis das componentes x e y do
    momento: R_y = P R_x(P q), L_y = L_x(P q) P, com P a permutação 1 <-> 2.
    """
    if dim == 2 and axis == 1:
        perm = [0, 2, 1, 3]
        lx, rx = _euler_eigenvectors(q[perm], gamma, 2, 0)
        return lx[..., :, perm], rx[..., perm, :]

    rho = q[0]
    u = q[1] / rho
    v = q[2] / rho if dim == 2 else np.zeros_like(u)
    energy = q[-1]
    q2 = u * u + v * v
    p = (gamma - 1.0) * (energy - 0.5 * rho * q2)
    c = np.sqrt(gamma * p / rho)
    h = (energy + p) / rho
    b1 = (gamma - 1.0) / (c * c)
    b2 = 0.5 * b1 * q2
    one, zero = np.ones_like(u), np.zeros_like(u)

    if dim == 1:
        r = np.stack([
            np.stack([one, one, one], -1),
            np.stack([u - c, u, u + c], -1),
            np.stack([h - u * c, 0.5 * u * u, h + u * c], -1),
        ], -2)
        left = np.stack([
            np.stack([0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1], -1),
            np.stack([1.0 - b2, b1 * u, -b1], -1),
            np.stack([0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1], -1),
        ], -2)
        return left, r

    r = np.stack([
        np.stack([one, one, zero, one], -1),
        np.stack([u - c, u, zero, u + c], -1),
        np.stack([v, v, one, v], -1),
        np.stack([h - u * c, 0.5 * q2, v, h + u * c], -1),
    ], -2)
    left = np.stack([
        np.stack([0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1], -1),
        np.stack([1.0 - b2, b1 * u, b1 * v, -b1], -1),
        np.stack([-v, zero, one, zero], -1),
        np.stack([0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1], -1),
    ], -2)
    return left, r


MODELS = {
    "burgers1d": Burgers1D,
    "burgers2d": Burgers2D,
    "euler1d": Euler1D,
    "euler2d": Euler2D,
}


def make_model(name, **kwargs):
    """Instancia um modelo pelo nome registado."""
    try:
        return MODELS[name](**kwargs)
    except KeyError:
        raise ConfigurationError(f"Modelo desconhecido: {name}") from None
