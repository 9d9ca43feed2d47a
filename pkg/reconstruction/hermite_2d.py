# reconstruction/hermite_2d.py

"""
Reconstrução Hermite 2D sobre o estêncil 3 x 3.

As células do estêncil são numeradas de 1 a 9 da esquerda para a direita e
de baixo para cima (5 é a célula alvo):

    7 8 9
    4 5 6
    1 2 3

O vetor de dados tem 19 entradas: as 9 médias, os primeiros momentos em x
(v) nas células 2, 4, 5, 6, 8 e os primeiros momentos em y (w) nas mesmas
células. O quártico p0 cumpre exatamente as 9 médias e os momentos da
célula 5 e, no sentido dos mínimos quadrados, os restantes 8 momentos. Os
quadráticos p1..p4 usam os blocos 2 x 2 que contêm a célula 5.

Pontos de avaliação (coordenadas normalizadas):
- 12 pontos de interface: 3 pontos de Gauss em cada lado, ordem
  esquerdo, direito, inferior, superior;
- 9 pontos interiores no produto tensorial de Gauss.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
from functools import lru_cache

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError, NumericalStateError
from physics.quadrature import GAUSS_3
from .hermite_1d import StencilData1, modify_first_moment
from .polynomial import (
    condition_row_2d, monomials_2d, point_row_2d, smoothness_gram_2d,
    solve_constrained_lsq, solve_interpolation,
)
from .weights import EPSILON, LinearWeights, hweno_combine, nonlinear_weights

LABEL_OFFSETS = {label: ((label - 1) % 3 - 1, (label - 1) // 3 - 1) for label in range(1, 10)}
MOMENT_LABELS = (2, 4, 5, 6, 8)
SMALL_STENCILS = ((1, 2, 4, 5), (2, 3, 5, 6), (4, 5, 7, 8), (5, 6, 8, 9))
N_INPUTS = 19

SIDES = ("left", "right", "bottom", "top")


def _input_index(kind, label):
    if kind == "u":
        return label - 1
    base = 9 if kind == "v" else 14
    return base + MOMENT_LABELS.index(label)


def interface_points():
    """Array (4, 3, 2) de pontos (xi, eta) nos lados esquerdo, direito, inferior e superior."""
    g = GAUSS_3.xi
    half = np.full(3, 0.5)
    return np.stack([
        np.stack([-half, g], -1),
        np.stack([half, g], -1),
        np.stack([g, -half], -1),
        np.stack([g, half], -1),
    ])


def interior_points():
    """Array (3, 3, 2) com o ponto (xi_k, eta_l) na posição [k, l]."""
    g = GAUSS_3.xi
    xi, eta = np.meshgrid(g, g, indexing="ij")
    return np.stack([xi, eta], -1)


@dataclass(frozen=True)
class StencilData2:
    """Dados do estêncil 3 x 3: u_bar (9, ...), v_bar e w_bar (5, ...) nas etiquetas 2, 4, 5, 6, 8."""

    u_bar: np.ndarray
    v_bar: np.ndarray
    w_bar: np.ndarray

    def __post_init__(self):
        if np.shape(self.u_bar)[0] != 9 or np.shape(self.v_bar)[0] != 5 or np.shape(self.w_bar)[0] != 5:
            raise ConfigurationError("O estêncil 2D tem 9 médias e 5 + 5 primeiros momentos")

    @classmethod
    def of(cls, u_bar, v_bar, w_bar):
        return cls(*(np.asarray(a, dtype=float) for a in (u_bar, v_bar, w_bar)))

    def vector(self):
        return np.concatenate([self.u_bar, self.v_bar, self.w_bar], axis=0)

    def require_finite(self):
        if not all(np.all(np.isfinite(a)) for a in (self.u_bar, self.v_bar, self.w_bar)):
            raise NumericalStateError("Estêncil 2D com valores não finitos")
        return self


@dataclass(frozen=True)
class CandidateKernel2:
    """Candidato 2D: `coeffs` (n_monómios, 19) e a forma quadrática do indicador de suavidade."""

    name: str
    exps: tuple
    coeffs: np.ndarray
    smoothness_form: np.ndarray

    def point_row(self, xi, eta):
        return point_row_2d(xi, eta, self.exps) @ self.coeffs

    def rows_at(self, points):
        """Linhas de avaliação para um array de pontos (..., 2) -> (..., 19)."""
        flat = points.reshape(-1, 2)
        rows = np.stack([self.point_row(x, y) for x, y in flat])
        return rows.reshape(points.shape[:-1] + (N_INPUTS,))


@dataclass(frozen=True)
class Quartic2Kernel(CandidateKernel2):
    """Quártico do estêncil grande com as linhas de avaliação já calculadas."""

    interface_rows: np.ndarray = None
    interior_rows: np.ndarray = None


def _selection(conditions):
    sel = np.zeros((len(conditions), N_INPUTS))
    for row, (kind, label) in enumerate(conditions):
        sel[row, _input_index(kind, label)] = 1.0
    return sel


def _check_mesh(dx, dy):
    if not (dx > 0 and dy > 0):
        raise ConfigurationError(f"Espaçamentos inválidos: dx={dx}, dy={dy}")
    return dy / dx


def build_quartic_kernel(dx, dy):
    """
    Quártico p0 por mínimos quadrados com restrições.

    Restrições exatas: médias nas 9 células e v, w na célula 5.
    Resíduo minimizado (pesos iguais): v, w nas células 2, 4, 6, 8.
    """
    ratio = _check_mesh(dx, dy)
    exps = tuple(monomials_2d(4))
    equality = [("u", label) for label in range(1, 10)] + [("v", 5), ("w", 5)]
    least = [(kind, label) for kind in ("v", "w") for label in MOMENT_LABELS if label != 5]
    c_eq = np.array([condition_row_2d(k, LABEL_OFFSETS[lb], exps) for k, lb in equality])
    b_ls = np.array([condition_row_2d(k, LABEL_OFFSETS[lb], exps) for k, lb in least])
    coeffs = solve_constrained_lsq(c_eq, _selection(equality), b_ls, _selection(least), "p0 2D")
    form = coeffs.T @ smoothness_gram_2d(exps, ratio) @ coeffs
    base = CandidateKernel2("p0", exps, coeffs, form)
    return Quartic2Kernel(
        "p0", exps, coeffs, form,
        interface_rows=base.rows_at(interface_points()),
        interior_rows=base.rows_at(interior_points()),
    )


def build_quadratic_kernels(dx, dy):
    """Os quatro quadráticos p1..p4: 4 médias do bloco 2 x 2 mais v, w da célula 5."""
    ratio = _check_mesh(dx, dy)
    exps = tuple(monomials_2d(2))
    gram = smoothness_gram_2d(exps, ratio)
    kernels = []
    for n, labels in enumerate(SMALL_STENCILS, start=1):
        conditions = [("u", label) for label in labels] + [("v", 5), ("w", 5)]
        matrix = np.array([condition_row_2d(k, LABEL_OFFSETS[lb], exps) for k, lb in conditions])
        coeffs = solve_interpolation(matrix, _selection(conditions), f"p{n} 2D")
        kernels.append(CandidateKernel2(f"p{n}", exps, coeffs, coeffs.T @ gram @ coeffs))
    return tuple(kernels)


@dataclass(frozen=True)
class HwenoKernel2:
    """Conjunto completo para uma malha: p0, p1..p4 e as formas empilhadas."""

    quartic: Quartic2Kernel
    quadratics: tuple
    interface_rows: np.ndarray  # (5, 4, 3, 19)
    forms: np.ndarray           # (5, 19, 19)

    @property
    def candidates(self):
        return (self.quartic,) + self.quadratics


@lru_cache(maxsize=16)
def kernel_set(dx, dy):
    """Núcleos 2D de uma malha, construídos uma única vez por (dx, dy)."""
    quartic = build_quartic_kernel(dx, dy)
    quads = build_quadratic_kernels(dx, dy)
    pts = interface_points()
    rows = np.stack([quartic.interface_rows] + [q.rows_at(pts) for q in quads])
    forms = np.stack([quartic.smoothness_form] + [q.smoothness_form for q in quads])
    return HwenoKernel2(quartic, quads, rows, forms)


def _as_weights(gamma, n):
    w = gamma if isinstance(gamma, LinearWeights) else LinearWeights(tuple(gamma))
    if len(w) != n:
        raise ConfigurationError(f"São necessários {n} pesos lineares (recebidos {len(w)})")
    return w


# --- Operações por estêncil ---
def modify_moments_2d(row_stencil, col_stencil, gamma, eps=EPSILON):
    """
    Modificação dimensão a dimensão: v pelo estêncil em x, w pelo estêncil em y.

    Cada estêncil é um StencilData1 (médias e o primeiro momento da sua direção).
    """
    return modify_first_moment(row_stencil, gamma, eps), modify_first_moment(col_stencil, gamma, eps)


def smoothness_2d(s, kernel=None):
    """(beta_0, ..., beta_4) como formas quadráticas nos 19 dados."""
    kernel = kernel or kernel_set(1.0, 1.0)
    vec = s.vector()
    return np.einsum("k...,nkl,l...->n...", vec, kernel.forms, vec)


def hweno_point_2d(s, point, gamma, eps=EPSILON, kernel=None):
    """Valor HWENO num ponto (xi, eta) do bordo da célula 5."""
    kernel = kernel or kernel_set(1.0, 1.0)
    gamma = _as_weights(gamma, 5)
    vec = s.require_finite().vector()
    values = np.stack([np.tensordot(c.point_row(*point), vec, axes=(0, 0)) for c in kernel.candidates])
    omega = nonlinear_weights(smoothness_2d(s, kernel), gamma, eps)
    return hweno_combine(values, omega, gamma)


def linear_point_2d(s, point, kernel=None):
    """Valor do quártico p0 num ponto (xi, eta)."""
    kernel = kernel or kernel_set(1.0, 1.0)
    return np.tensordot(kernel.quartic.point_row(*point), s.require_finite().vector(), axes=(0, 0))


# --- Versões vetorizadas usadas pelo lado direito 2D ---
def hweno_interface_values(vec, kernel, gamma, eps=EPSILON):
    """Valores HWENO nos 12 pontos de interface: (4, 3, ...) a partir de vec (19, ...)."""
    gamma = _as_weights(gamma, 5)
    values = np.einsum("nspk,k...->nsp...", kernel.interface_rows, vec)
    beta = np.einsum("k...,nkl,l...->n...", vec, kernel.forms, vec)
    omega = nonlinear_weights(beta, gamma, eps)
    return hweno_combine(values, omega[:, None, None], gamma)


def linear_interface_values(vec, kernel):
    return np.einsum("spk,k...->sp...", kernel.quartic.interface_rows, vec)


def linear_interior_values(vec, kernel):
    """Valores de p0 nos 9 pontos interiores: (3, 3, ...)."""
    return np.einsum("abk,k...->ab...", kernel.quartic.interior_rows, vec)


def stencil2_from_arrays(u_bar, v_bar, w_bar, core):
    """
    Vetor (19, ...) do estêncil para as células `core` = (fatia_x, fatia_y).

    Os arrays têm os dois eixos espaciais à frente; eixos extra à direita
    (por exemplo as variáveis) são preservados.
    """
    sx, sy = core

    def shifted(arr, label):
        a, b = LABEL_OFFSETS[label]
        return arr[sx.start + a:sx.stop + a, sy.start + b:sy.stop + b]

    parts = [shifted(u_bar, lb) for lb in range(1, 10)]
    parts += [shifted(v_bar, lb) for lb in MOMENT_LABELS]
    parts += [shifted(w_bar, lb) for lb in MOMENT_LABELS]
    return np.stack(parts)

