# problems/exact.py

"""
Soluções exatas usadas como oráculos de erro.

- Burgers 1D com dado sinusoidal: fórmula de Lax-Oleinik (minimização numa
  amostra densa ao longo das características) refinada por Newton em
  y + t u0(y) = x. Antes do choque coincide com a solução suave.
- Burgers 2D com dado em x + y: reduz-se ao caso 1D na variável (x + y)/2.
- Advecção suave para Euler: a densidade é transportada com velocidade
  constante e a pressão é uniforme.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass

# --- Imports de Terceiros ---
import numpy as np

CHUNK = 4096
N_SAMPLES = 801
NEWTON_ITERATIONS = 30


@dataclass(frozen=True)
class SineData:
    """u0(x) = mean + amplitude * sin(wavenumber * x)."""

    mean: float = 0.5
    amplitude: float = 1.0
    wavenumber: float = np.pi

    def __call__(self, x):
        return self.mean + self.amplitude * np.sin(self.wavenumber * x)

    def derivative(self, x):
        return self.amplitude * self.wavenumber * np.cos(self.wavenumber * x)

    def primitive(self, x):
        """Integral de 0 a x."""
        return self.mean * x + self.amplitude * (1.0 - np.cos(self.wavenumber * x)) / self.wavenumber

    @property
    def bounds(self):
        return self.mean - abs(self.amplitude), self.mean + abs(self.amplitude)


def _burgers_chunk(data, x, t):
    lo_u, hi_u = data.bounds
    lo = x - t * hi_u
    hi = x - t * lo_u
    s = np.linspace(0.0, 1.0, N_SAMPLES)
    y = lo[:, None] + (hi - lo)[:, None] * s[None, :]
    cost = (x[:, None] - y) ** 2 / (2.0 * t) + data.primitive(y)
    best = y[np.arange(x.size), np.argmin(cost, axis=1)]
    for _ in range(NEWTON_ITERATIONS):
        g = best + t * data(best) - x
        dg = 1.0 + t * data.derivative(best)
        step = np.where(dg > 1e-12, g / np.where(dg > 1e-12, dg, 1.0), 0.0)
        best = np.clip(best - step, lo, hi)
    return data(best)


def burgers_solution(data, x, t):
    """Solução de entropia de u_t + (u^2/2)_x = 0 com u(x, 0) = data(x)."""
    x = np.asarray(x, dtype=float)
    if t == 0.0:
        return data(x)
    flat = x.ravel()
    out = np.empty_like(flat)
    for start in range(0, flat.size, CHUNK):
        part = slice(start, start + CHUNK)
        out[part] = _burgers_chunk(data, flat[part], t)
    return out.reshape(x.shape)


def burgers1d_exact(data, t):
    """Função x -> u(x, t) com o eixo de variáveis à frente."""
    return lambda x: burgers_solution(data, x, t)[np.newaxis]


def burgers2d_exact(data, t):
    """Função (x, y) -> u(x, y, t) para dados que dependem só de (x + y)/2."""
    return lambda x, y: burgers_solution(data, 0.5 * (x + y), t)[np.newaxis]


def euler_advection_density(x, t, amplitude=0.2, wavenumber=np.pi, speed=1.0):
    """rho(x, t) = 1 + amplitude sin(k (x - speed t))."""
    return 1.0 + amplitude * np.sin(wavenumber * (x - speed * t))


def euler1d_advection_exact(model, t):
    return lambda x: model.conservative(euler_advection_density(x, t), 1.0, 1.0)


def euler2d_advection_exact(model, t):
    """Densidade transportada na diagonal com u = v = 1: rho(x + y - 2t)."""
    return lambda x, y: model.conservative(euler_advection_density(x + y, 2.0 * t), 1.0, 1.0, 1.0)
