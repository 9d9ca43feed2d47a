# reconstruction/weights.py

"""
Pesos lineares artificiais e pesos não lineares da reconstrução HWENO.

Qualquer conjunto de pesos lineares positivos com soma 1 serve: o polinómio
de grau alto é reescrito como combinação em que os pesos se cancelam
exatamente, e só os pesos não lineares (função dos indicadores de
suavidade) decidem a contribuição dos candidatos de grau baixo.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError

EPSILON = 1e-6
LOW_DEGREE_WEIGHT = 0.01


@dataclass(frozen=True)
class LinearWeights:
    """Pesos lineares (gamma_0, gamma_1, ...); gamma_0 é o do candidato de grau alto."""

    values: tuple

    def __post_init__(self):
        g = np.asarray(self.values, dtype=float)
        if g.ndim != 1 or g.size < 2:
            raise ConfigurationError("São necessários pelo menos dois pesos lineares")
        if np.any(g <= 0.0):
            raise ConfigurationError(f"Pesos lineares têm de ser positivos: {self.values}")
        if abs(g.sum() - 1.0) > 1e-14:
            raise ConfigurationError(f"Pesos lineares têm de somar 1 (soma = {g.sum()!r})")

    @property
    def array(self):
        return np.asarray(self.values, dtype=float)

    def __len__(self):
        return len(self.values)

    # --- Escolhas disponíveis ---
    @classmethod
    def from_low(cls, n_low, low):
        """gamma_n = `low` nos candidatos de grau baixo e o restante no grau alto."""
        high = 1.0 - n_low * low
        return cls(_normalized([high] + [low] * n_low))

    @classmethod
    def default(cls, dim):
        """0.01 para cada candidato de grau baixo (2 em 1D, 4 em 2D)."""
        return cls.from_low(_n_low(dim), LOW_DEGREE_WEIGHT)

    @classmethod
    def uniform(cls, dim):
        n = _n_low(dim) + 1
        return cls(_normalized([1.0 / n] * n))

    @classmethod
    def random(cls, dim, rng):
        """Pesos positivos aleatórios com soma 1, tirados do gerador `rng`."""
        n = _n_low(dim) + 1
        g = rng.uniform(0.05, 1.0, size=n)
        return cls(_normalized(g))


def _n_low(dim):
    if dim not in (1, 2):
        raise ConfigurationError(f"Dimensão não suportada: {dim}")
    return 2 if dim == 1 else 4


def _normalized(values):
    """Normaliza e absorve o erro de arredondamento no primeiro peso."""
    g = np.asarray(values, dtype=float)
    g = g / g.sum()
    g[0] = 1.0 - g[1:].sum()
    return tuple(float(v) for v in g)


def nonlinear_weights(beta, gamma, eps=EPSILON):
    """
    Pesos não lineares a partir dos indicadores de suavidade.

    tau = (media_n |beta_0 - beta_n|)^2, omega_n ~ gamma_n (1 + tau / (beta_n + eps)).

    :param beta: array `(n_cand, ...)` com beta_0 primeiro.
    :param gamma: LinearWeights ou array de `n_cand` pesos.
    :return: omega com a mesma forma de `beta`, não negativo e de soma 1.
    """
    beta = np.asarray(beta, dtype=float)
    g = gamma.array if isinstance(gamma, LinearWeights) else np.asarray(gamma, dtype=float)
    g = g.reshape((-1,) + (1,) * (beta.ndim - 1))
    tau = np.mean(np.abs(beta[0:1] - beta[1:]), axis=0, keepdims=True) ** 2
    omega_bar = g * (1.0 + tau / (beta + eps))
    return omega_bar / omega_bar.sum(axis=0, keepdims=True)


def hweno_combine(values, omega, gamma):
    """
    omega_0 (p_0/gamma_0 - sum gamma_n p_n / gamma_0) + sum omega_n p_n.

    `values` e `omega` têm o eixo dos candidatos à frente; os eixos restantes
    de `values` podem ter dimensões extra à direita (vários pontos por célula).
    """
    values = np.asarray(values, dtype=float)
    g = gamma.array if isinstance(gamma, LinearWeights) else np.asarray(gamma, dtype=float)
    extra = values.ndim - np.ndim(omega)
    om = np.asarray(omega).reshape(np.shape(omega) + (1,) * extra)
    gshape = (-1,) + (1,) * (values.ndim - 1)
    g = g.reshape(gshape)
    high = (values[0] - np.sum(g[1:] * values[1:], axis=0)) / g[0]
    return om[0] * high + np.sum(om[1:] * values[1:], axis=0)
