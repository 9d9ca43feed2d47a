# physics/quadrature.py

"""
Regras de quadratura normalizadas à largura da célula.

Os nós são deslocamentos ao centro em unidades de dx (intervalo [-1/2, 1/2]) e
os pesos somam 1, de modo que a regra devolve diretamente a média na célula.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
import math

# --- Imports de Terceiros ---
import numpy as np


@dataclass(frozen=True)
class QuadratureRule:
    """Regra de quadratura 1D em [-1/2, 1/2] com pesos normalizados."""

    name: str
    nodes: tuple
    weights: tuple
    degree: int

    @property
    def xi(self):
        return np.asarray(self.nodes)

    @property
    def w(self):
        return np.asarray(self.weights)

    def average(self, values, axis=-1):
        """Média na célula a partir dos valores nos nós (ao longo de `axis`)."""
        return np.tensordot(values, self.w, axes=([axis], [0]))


_S5 = math.sqrt(5.0) / 10.0
_S15 = math.sqrt(15.0) / 10.0

# Gauss-Lobatto de 4 pontos: integra o termo de volume F_i do primeiro momento 1D
GAUSS_LOBATTO_4 = QuadratureRule(
    "gauss-lobatto-4",
    (-0.5, -_S5, _S5, 0.5),
    (1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0),
    degree=5,
)

# Gauss de 3 pontos: integrais de linha nas arestas e produto tensorial no interior 2D
GAUSS_3 = QuadratureRule(
    "gauss-3",
    (-_S15, 0.0, _S15),
    (5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0),
    degree=5,
)


def gauss_legendre(n):
    """Regra de Gauss-Legendre de `n` pontos no intervalo normalizado."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return QuadratureRule(f"gauss-{n}", tuple(0.5 * nodes), tuple(0.5 * weights), degree=2 * n - 1)
