# problems/riemann.py

"""
Solução exata do problema de Riemann para as equações de Euler 1D (gás ideal).

A pressão na região estrela é a raiz de f_L(p) + f_R(p) + (u_R - u_L) = 0,
com f_K a função de choque (p > p_K) ou de rarefação (p <= p_K). A solução
é autossemelhante em s = (x - x0)/t e é amostrada vetorialmente.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass

# --- Imports de Terceiros ---
import numpy as np
from scipy.optimize import brentq

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError


@dataclass(frozen=True)
class PrimitiveState:
    rho: float
    u: float
    p: float

    def sound_speed(self, gamma):
        return float(np.sqrt(gamma * self.p / self.rho))


def _pressure_function(p, side, gamma):
    """f_K(p): ramo de choque se p > p_K, de rarefação caso contrário."""
    if p > side.p:
        a_k = 2.0 / ((gamma + 1.0) * side.rho)
        b_k = (gamma - 1.0) / (gamma + 1.0) * side.p
        return (p - side.p) * np.sqrt(a_k / (p + b_k))
    a = side.sound_speed(gamma)
    return 2.0 * a / (gamma - 1.0) * ((p / side.p) ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)


@dataclass(frozen=True)
class RiemannSolution:
    """Estado estrela de um problema de Riemann e amostragem da solução."""

    left: PrimitiveState
    right: PrimitiveState
    gamma: float
    p_star: float
    u_star: float

    @classmethod
    def solve(cls, left, right, gamma=1.4):
        """
        :param left, right: PrimitiveState (ou tuplos rho, u, p).
        :raises ConfigurationError: se os dados geram vácuo.
        """
        left, right = PrimitiveState(*left), PrimitiveState(*right)
        a_l, a_r = left.sound_speed(gamma), right.sound_speed(gamma)
        if 2.0 * (a_l + a_r) / (gamma - 1.0) <= right.u - left.u:
            raise ConfigurationError("Os dados de Riemann geram vácuo")

        def residual(p):
            return _pressure_function(p, left, gamma) + _pressure_function(p, right, gamma) + right.u - left.u

        lo, hi = 1e-14, max(left.p, right.p)
        while residual(hi) < 0.0:
            hi *= 2.0
        p_star = brentq(residual, lo, hi, xtol=1e-15, rtol=1e-14, maxiter=200)
        u_star = 0.5 * (left.u + right.u) + 0.5 * (
            _pressure_function(p_star, right, gamma) - _pressure_function(p_star, left, gamma))
        return cls(left, right, gamma, float(p_star), float(u_star))

    def _star_density(self, side):
        g = self.gamma
        ratio = self.p_star / side.p
        if ratio > 1.0:
            g6 = (g - 1.0) / (g + 1.0)
            return side.rho * (ratio + g6) / (g6 * ratio + 1.0)
        return side.rho * ratio ** (1.0 / g)

    def _sample_side(self, s, side, sign):
        """
        Estado (rho, u, p) para as velocidades `s`, do lado esquerdo (sign=-1)
        ou direito (sign=+1) do contacto.
        """
        g = self.gamma
        a = side.sound_speed(g)
        rho_star = self._star_density(side)
        outer = [np.full_like(s, side.rho), np.full_like(s, side.u), np.full_like(s, side.p)]
        star = [np.full_like(s, rho_star), np.full_like(s, self.u_star), np.full_like(s, self.p_star)]

        if self.p_star > side.p:
            ratio = self.p_star / side.p
            speed = side.u + sign * a * np.sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g))
            in_outer = sign * (s - speed) >= 0.0
            return [np.where(in_outer, o, st) for o, st in zip(outer, star)]

        a_star = a * (self.p_star / side.p) ** ((g - 1.0) / (2.0 * g))
        head = side.u + sign * a
        tail = self.u_star + sign * a_star
        in_outer = sign * (s - head) >= 0.0
        in_star = sign * (s - tail) <= 0.0
        c = 2.0 / (g + 1.0)
        u_fan = c * (-sign * a + 0.5 * (g - 1.0) * side.u + s)
        a_fan = c * (a - sign * 0.5 * (g - 1.0) * (side.u - s))
        fan = [side.rho * (a_fan / a) ** (2.0 / (g - 1.0)), u_fan,
               side.p * (a_fan / a) ** (2.0 * g / (g - 1.0))]
        return [np.where(in_outer, o, np.where(in_star, st, f)) for o, st, f in zip(outer, star, fan)]

    def sample(self, x, t, x0=0.0):
        """Variáveis primitivas (rho, u, p) empilhadas nos pontos x no instante t."""
        x = np.asarray(x, dtype=float)
        if t <= 0.0:
            s = np.where(x < x0, -np.inf, np.inf)
        else:
            s = (x - x0) / t
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            bounded = np.clip(s, -1e300, 1e300)
            left = self._sample_side(bounded, self.left, -1.0)
            right = self._sample_side(bounded, self.right, 1.0)
        on_left = s <= self.u_star
        return np.stack([np.where(on_left, lq, rq) for lq, rq in zip(left, right)])

    def conservative(self, x, t, x0=0.0):
        """Estado conservado (rho, rho u, E) nos pontos x."""
        rho, u, p = self.sample(x, t, x0)
        return np.stack([rho, rho * u, p / (self.gamma - 1.0) + 0.5 * rho * u * u])
