# solver_core/indicator.py

"""
Indicador KXRCF de células problemáticas.

Para cada variável indicadora q (u no caso escalar; rho e E para Euler):

    I = | soma dos integrais de (q_dentro - q_vizinho) nas arestas de entrada |
        / (h^((k+1)/2) * |arestas de entrada| * max|q| nos traços da própria célula)

com h = dx em 1D e sqrt(dx dy) em 2D, e k o grau configurável (4 por omissão,
de modo que k + 1 é a ordem dos traços). Uma aresta é de entrada quando
v.n <= 0, com v a média das velocidades das duas células que a partilham;
assim uma descontinuidade parada numa aresta continua a ser vista pelas duas
células. Os traços são os do polinómio de grau alto. A célula é marcada se
I > limiar para alguma variável indicadora.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
import logging

# --- Imports de Terceiros ---
import numpy as np
from scipy import ndimage

# --- Imports Locais da Aplicação ---
from physics.quadrature import GAUSS_3
from reconstruction.hermite_2d import kernel_set
from .scheme import KXRCF_DEGREE, IndicatorMode
from .traces import linear_traces_1d, linear_traces_2d

logger = logging.getLogger(__name__)

VACUUM_LEVEL = 1e-13


@dataclass(frozen=True)
class TroubleMap:
    """
    Marcas de células problemáticas.

    - `troubled`: células interiores marcadas pelo indicador.
    - `stencil`: células do núcleo (interior mais uma camada fantasma) com
      alguma célula marcada no seu estêncil grande.
    - `fluid`: máscara interior das células de fluido (None se não houver sólido).
    """

    troubled: np.ndarray
    stencil: np.ndarray
    fluid: np.ndarray | None = None

    @property
    def fraction(self):
        """Fração de células de fluido marcadas."""
        if self.fluid is None:
            return float(np.mean(self.troubled))
        n = np.count_nonzero(self.fluid)
        return float(np.count_nonzero(self.troubled & self.fluid) / n) if n else 0.0

    @property
    def any_troubled(self):
        return bool(np.any(self.troubled))

    @property
    def interior_stencil(self):
        """Marcas de estêncil restritas às células interiores."""
        inner = tuple(slice(1, -1) for _ in range(self.stencil.ndim))
        return self.stencil[inner]


def dilate(troubled, periodic):
    """
    Marcas de estêncil no núcleo: dilatação das marcas pelo estêncil 3 (1D) ou 3 x 3 (2D).

    As marcas interiores são primeiro estendidas por duas camadas, periódicas
    nos eixos periódicos e por espelho nos restantes.
    """
    padded = troubled
    for axis, is_periodic in enumerate(periodic):
        width = [(0, 0)] * troubled.ndim
        width[axis] = (2, 2)
        padded = np.pad(padded, width, mode="wrap" if is_periodic else "symmetric")
    grown = ndimage.binary_dilation(padded, structure=np.ones((3,) * troubled.ndim, dtype=bool))
    return grown[tuple(slice(1, -1) for _ in range(troubled.ndim))]


def build_trouble_map(troubled, bc, dim, fluid=None):
    troubled = np.asarray(troubled, dtype=bool)
    if fluid is not None:
        troubled = troubled & fluid
    periodic = [bc.is_periodic(axis) for axis in range(dim)]
    return TroubleMap(troubled, dilate(troubled, periodic), fluid)


def _ratio(jump, measure, norm, scale):
    """|jump| / (h^((k+1)/2) |dK-| max|q|), nulo sem arestas de entrada ou em vácuo."""
    ok = (measure > 0) & (norm >= VACUUM_LEVEL)
    safe = np.where(ok, scale * measure * norm, 1.0)
    return np.where(ok, np.abs(jump) / safe, 0.0)


def _edge_velocity(model, u_bar, axis, lo, hi):
    """Média das velocidades das duas células que partilham cada aresta."""
    with np.errstate(divide="ignore", invalid="ignore"):
        vel = model.velocity(u_bar, axis)
    return 0.5 * (vel[lo] + vel[hi])


def _indicator_1d(filled, grid, model, degree):
    g, n = grid.n_ghost, grid.n_cells
    left, right, _ = linear_traces_1d(filled.u_bar, filled.v_bar)
    ic = slice(g - 1, g - 1 + n)
    before = slice(g - 2, g - 2 + n)
    after = slice(g, g + n)
    cells, cells_m, cells_p = slice(g, g + n), slice(g - 1, g - 1 + n), slice(g + 1, g + 1 + n)
    # aresta parada conta como entrada
    in_left = _edge_velocity(model, filled.u_bar, 0, cells_m, cells) >= 0.0
    in_right = _edge_velocity(model, filled.u_bar, 0, cells, cells_p) <= 0.0
    measure = in_left.astype(float) + in_right.astype(float)
    scale = grid.dx ** (0.5 * (degree + 1))
    values = []
    for var in model.indicator_variables():
        jump = (np.where(in_left, left[var, ic] - right[var, before], 0.0)
                + np.where(in_right, right[var, ic] - left[var, after], 0.0))
        norm = np.maximum(np.abs(left[var, ic]), np.abs(right[var, ic]))
        values.append(_ratio(jump, measure, norm, scale))
    return np.max(values, axis=0)


def _indicator_2d(filled, grid, model, degree):
    g, nx, ny = grid.n_ghost, grid.nx, grid.ny
    face, _ = linear_traces_2d(filled.u_bar, filled.v_bar, filled.w_bar, kernel_set(grid.dx, grid.dy))
    ix, jy = slice(g - 1, g - 1 + nx), slice(g - 1, g - 1 + ny)
    ixm, ixp = slice(g - 2, g - 2 + nx), slice(g, g + nx)
    jym, jyp = slice(g - 2, g - 2 + ny), slice(g, g + ny)
    w = GAUSS_3.w[:, None, None]
    ci, cim, cip = slice(g, g + nx), slice(g - 1, g - 1 + nx), slice(g + 1, g + 1 + nx)
    cj, cjm, cjp = slice(g, g + ny), slice(g - 1, g - 1 + ny), slice(g + 1, g + 1 + ny)
    in_l = _edge_velocity(model, filled.u_bar, 0, (cim, cj), (ci, cj)) >= 0.0
    in_r = _edge_velocity(model, filled.u_bar, 0, (ci, cj), (cip, cj)) <= 0.0
    in_b = _edge_velocity(model, filled.u_bar, 1, (ci, cjm), (ci, cj)) >= 0.0
    in_t = _edge_velocity(model, filled.u_bar, 1, (ci, cj), (ci, cjp)) <= 0.0
    measure = grid.dy * (in_l.astype(float) + in_r) + grid.dx * (in_b.astype(float) + in_t)
    scale = np.sqrt(grid.dx * grid.dy) ** (0.5 * (degree + 1))
    values = []
    for var in model.indicator_variables():
        own = face[:, :, var, ix, jy]
        jl = np.sum(w * (own[0] - face[1, :, var, ixm, jy]), axis=0)
        jr = np.sum(w * (own[1] - face[0, :, var, ixp, jy]), axis=0)
        jb = np.sum(w * (own[2] - face[3, :, var, ix, jym]), axis=0)
        jt = np.sum(w * (own[3] - face[2, :, var, ix, jyp]), axis=0)
        jump = (grid.dy * (np.where(in_l, jl, 0.0) + np.where(in_r, jr, 0.0))
                + grid.dx * (np.where(in_b, jb, 0.0) + np.where(in_t, jt, 0.0)))
        norm = np.max(np.abs(own), axis=(0, 1))
        values.append(_ratio(jump, measure, norm, scale))
    return np.max(values, axis=0)


def kxrcf_flag(field, model, grid, t=0.0, *, bc, threshold=1.0, degree=KXRCF_DEGREE, fluid=None):
    """
    Marca as células interiores pelo indicador KXRCF.

    :param field: MomentField com as células fantasma já preenchidas.
    :param t: instante do estado (só para diagnóstico).
    :param degree: grau k da escala h^((k+1)/2).
    :param fluid: máscara interior das células de fluido; células sólidas nunca são marcadas.
    :return: TroubleMap com as marcas e a sua dilatação pelo estêncil.
    """
    if grid.dim == 1:
        ratio = _indicator_1d(field, grid, model, degree)
    else:
        ratio = _indicator_2d(field, grid, model, degree)
    tmap = build_trouble_map(ratio > threshold, bc, grid.dim, fluid)
    logger.debug("KXRCF em t=%.6g: %.2f%% de células marcadas", t, 100.0 * tmap.fraction)
    return tmap


def uniform_trouble_map(grid, bc, value, fluid=None):
    """Mapa com todas as células marcadas (value=True) ou nenhuma."""
    shape = tuple(s - 2 * grid.n_ghost for s in grid.shape)
    return build_trouble_map(np.full(shape, bool(value)), bc, grid.dim, fluid)


class IndicatorMixin:
    """
    Mixin que decide as células problemáticas de cada passo.

    Espera no objeto: `grid`, `bc`, `model`, `scheme` (SchemeMode) e
    `fluid_mask` (ou None).
    """

    def mark_troubled_cells(self, filled, t):
        """TroubleMap do estado `filled` conforme o modo do esquema."""
        kind = self.scheme.kind
        if kind == IndicatorMode.FORCE_ALL:
            return uniform_trouble_map(self.grid, self.bc, True, self.fluid_mask)
        if kind == IndicatorMode.LINEAR_ONLY:
            return uniform_trouble_map(self.grid, self.bc, False, self.fluid_mask)
        return kxrcf_flag(filled, self.model, self.grid, t, bc=self.bc,
                          threshold=self.scheme.kxrcf_threshold, degree=self.scheme.kxrcf_degree,
                          fluid=self.fluid_mask)
