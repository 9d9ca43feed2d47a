# reconstruction/polynomial.py

"""
Polinómios candidatos definidos por condições de momentos.

Tudo é feito em coordenadas locais normalizadas xi = (x - x_i)/dx (e
eta = (y - y_j)/dy em 2D), em que a célula alvo é [-1/2, 1/2] e a célula
vizinha de deslocamento j é [j - 1/2, j + 1/2]. Nestas coordenadas:

- média de xi^k na célula j:   ((j + 1/2)^(k+1) - (j - 1/2)^(k+1)) / (k + 1)
- primeiro momento na célula j: média de xi^k (xi - j)

Um candidato é guardado como a matriz que leva o vetor de dados do estêncil
aos coeficientes monomiais; avaliações pontuais, momentos e indicadores de
suavidade são depois formas lineares ou quadráticas nesse vetor.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
from math import factorial

# --- Imports de Terceiros ---
import numpy as np
import scipy.linalg

# --- Imports Locais da Aplicação ---
from components.errors import ConstructionError


def cell_average_monomial(k, j):
    """Média de xi^k na célula de deslocamento j."""
    return ((j + 0.5) ** (k + 1) - (j - 0.5) ** (k + 1)) / (k + 1)


def first_moment_monomial(k, j):
    """Média de xi^k (xi - j) na célula de deslocamento j."""
    return cell_average_monomial(k + 1, j) - j * cell_average_monomial(k, j)


def _falling(k, alpha):
    """Coeficiente de d^alpha/dxi^alpha aplicado a xi^k."""
    return factorial(k) // factorial(k - alpha) if alpha <= k else 0


def _centered_integral(m):
    """Integral de xi^m em [-1/2, 1/2]."""
    return cell_average_monomial(m, 0)


# --- 1D ---
def condition_row_1d(kind, j, degree):
    """Linha da condição `kind` ('u' média, 'v' primeiro momento) na célula j."""
    fn = cell_average_monomial if kind == "u" else first_moment_monomial
    return np.array([fn(k, j) for k in range(degree + 1)])


def point_row_1d(xi, degree):
    return np.array([xi ** k for k in range(degree + 1)])


def smoothness_gram_1d(degree):
    """
    Matriz M com beta = c^T M c para os coeficientes monomiais c.

    beta = sum_{alpha=1}^{grau} integral em [-1/2, 1/2] de (d^alpha p / dxi^alpha)^2,
    que em coordenadas normalizadas é a soma escalada por dx^(2 alpha - 1).
    """
    n = degree + 1
    gram = np.zeros((n, n))
    for alpha in range(1, degree + 1):
        for k in range(alpha, n):
            for m in range(alpha, n):
                gram[k, m] += _falling(k, alpha) * _falling(m, alpha) * _centered_integral(k + m - 2 * alpha)
    return gram


# --- 2D ---
def monomials_2d(degree):
    """Expoentes (p, q) de xi^p eta^q pela ordem 1, x, y, x^2, xy, y^2, ..."""
    return [(d - q, q) for d in range(degree + 1) for q in range(d + 1)]


def condition_row_2d(kind, offset, exps):
    """Linha da condição `kind` ('u', 'v' em x ou 'w' em y) na célula de deslocamento (a, b)."""
    a, b = offset
    row = []
    for p, q in exps:
        if kind == "u":
            row.append(cell_average_monomial(p, a) * cell_average_monomial(q, b))
        elif kind == "v":
            row.append(first_moment_monomial(p, a) * cell_average_monomial(q, b))
        else:
            row.append(cell_average_monomial(p, a) * first_moment_monomial(q, b))
    return np.array(row)


def point_row_2d(xi, eta, exps):
    return np.array([xi ** p * eta ** q for p, q in exps])


def smoothness_gram_2d(exps, ratio):
    """
    Matriz M com beta = c^T M c para polinómios 2D em coordenadas normalizadas.

    Cada derivada mista de ordem (l1, l2) pesa ratio^(l1 - l2), com
    ratio = dy/dx; para malhas quadradas todos os termos pesam 1.
    """
    degree = max(p + q for p, q in exps)
    n = len(exps)
    gram = np.zeros((n, n))
    for order in range(1, degree + 1):
        for l1 in range(order + 1):
            l2 = order - l1
            scale = ratio ** (l1 - l2)
            for r, (p1, q1) in enumerate(exps):
                d1 = _falling(p1, l1) * _falling(q1, l2)
                if d1 == 0:
                    continue
                for c, (p2, q2) in enumerate(exps):
                    d2 = _falling(p2, l1) * _falling(q2, l2)
                    if d2 == 0:
                        continue
                    gram[r, c] += (scale * d1 * d2
                                   * _centered_integral(p1 + p2 - 2 * l1)
                                   * _centered_integral(q1 + q2 - 2 * l2))
    return gram


# --- Sistemas lineares ---
def solve_interpolation(matrix, selection, label):
    """
    Coeficientes = matrix^-1 @ selection para um sistema quadrado de condições.

    :raises ConstructionError: se o sistema for singular.
    """
    if matrix.shape[0] != matrix.shape[1] or np.linalg.matrix_rank(matrix) < matrix.shape[0]:
        raise ConstructionError(f"Sistema de interpolação singular ({label})")
    return np.linalg.solve(matrix, selection)


def solve_constrained_lsq(c_eq, e_sel, b_ls, d_sel, label):
    """
    Mapa linear dados -> coeficientes de min ||B c - d|| sujeito a C c = e.

    Eliminação no espaço nulo: C^T = Q R, c = Q1 y1 + Q2 y2, com R1^T y1 = e
    e y2 a solução de mínimos quadrados de (B Q2) y2 = d - B Q1 y1.

    :raises ConstructionError: se C não tiver característica completa por linhas
        ou se B Q2 não tiver característica completa por colunas.
    """
    n_eq, n_coef = c_eq.shape
    if np.linalg.matrix_rank(c_eq) < n_eq:
        raise ConstructionError(f"Restrições de igualdade dependentes ({label})")
    q, r = scipy.linalg.qr(c_eq.T)
    q1, q2 = q[:, :n_eq], q[:, n_eq:]
    r1 = r[:n_eq, :]
    reduced = b_ls @ q2
    if np.linalg.matrix_rank(reduced) < n_coef - n_eq:
        raise ConstructionError(f"Mínimos quadrados sem solução única ({label})")
    y1 = scipy.linalg.solve_triangular(r1, e_sel, trans="T")
    y2, *_ = scipy.linalg.lstsq(reduced, d_sel - b_ls @ q1 @ y1)
    return q1 @ y1 + q2 @ y2


@dataclass(frozen=True)
class Candidate1D:
    """
    Polinómio candidato 1D: `coeffs` leva o vetor do estêncil
    [u_{-1}, u_0, u_1, v_{-1}, v_0, v_1] aos coeficientes monomiais.
    """

    name: str
    degree: int
    coeffs: np.ndarray

    @classmethod
    def from_conditions(cls, name, conditions):
        """
        Constrói o candidato a partir de condições (tipo, deslocamento).

        O grau é o número de condições menos um; a ordem das entradas é
        fixa: médias nas posições 0..2 e primeiros momentos nas 3..5.
        """
        degree = len(conditions) - 1
        matrix = np.array([condition_row_1d(kind, j, degree) for kind, j in conditions])
        selection = np.zeros((len(conditions), 6))
        for row, (kind, j) in enumerate(conditions):
            selection[row, (j + 1) + (3 if kind == "v" else 0)] = 1.0
        return cls(name, degree, solve_interpolation(matrix, selection, name))

    def point_row(self, xi):
        """Forma linear do valor pontual em xi."""
        return point_row_1d(xi, self.degree) @ self.coeffs

    def first_moment_row(self):
        """Forma linear do primeiro momento do candidato na célula alvo."""
        return condition_row_1d("v", 0, self.degree) @ self.coeffs

    def smoothness_form(self):
        """Forma quadrática Q (6 x 6) com beta = s^T Q s."""
        return self.coeffs.T @ smoothness_gram_1d(self.degree) @ self.coeffs
