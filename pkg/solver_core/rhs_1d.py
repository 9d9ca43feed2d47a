# solver_core/rhs_1d.py

"""
Lado direito semi-discreto 1D para as médias e os primeiros momentos.

    du_i/dt = -(f_{i+1/2} - f_{i-1/2}) / dx
    dv_i/dt = -(f_{i-1/2} + f_{i+1/2}) / (2 dx) + F_i / dx

F_i é a média do fluxo na célula pela regra de Gauss-Lobatto de 4 pontos,
com os traços da própria célula nos extremos e os valores lineares nos
dois nós interiores. Nas células do núcleo cujo estêncil contém uma célula
marcada, os traços dos extremos vêm da reconstrução HWENO (característica
para sistemas, no estado médio da interface); nas restantes, do
polinómio de grau alto.
"""

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.boundary import fill_ghosts
from components.errors import NumericalStateError
from components.moments import MomentField
from physics.flux import lax_friedrichs, wavespeed_bound
from physics.quadrature import GAUSS_LOBATTO_4
from reconstruction.hermite_1d import StencilData1, hweno_interface
from .traces import linear_traces_1d, stencil_1d


def _hweno_traces(u_bar, s, cells, model, gamma, eps):
    """
    Traços HWENO (esquerdo, direito) nas células do núcleo `cells`.

    `s` é o StencilData1 do núcleo; `cells` indexa o eixo do núcleo
    (célula global = índice + 1).
    """
    sub = StencilData1(s.u_bar[:, cells], s.v_bar[:, cells])
    if not model.is_system:
        return hweno_interface(sub, "left", gamma, eps).T, hweno_interface(sub, "right", gamma, eps).T

    out = []
    glob = cells + 1
    for side, nb in (("left", glob - 1), ("right", glob + 1)):
        left, right = model.interface_eigensystem(u_bar[:, glob], u_bar[:, nb], 0)
        char = StencilData1(np.einsum("cab,scb->sca", left, sub.u_bar),
                            np.einsum("cab,scb->sca", left, sub.v_bar))
        value = hweno_interface(char, side, gamma, eps)
        out.append(np.einsum("cab,cb->ca", right, value).T)
    return out[0], out[1]


def reconstruct_1d(filled, grid, trouble, model, gamma, eps):
    """
    Traços em todas as células do núcleo.

    :return: (u_left, u_right, internos) com formas (n_vars, n_core) e (2, n_vars, n_core).
    """
    left, right, inner = linear_traces_1d(filled.u_bar, filled.v_bar)
    if trouble is not None and np.any(trouble.stencil):
        cells = np.nonzero(trouble.stencil)[0] + grid.n_ghost - 2
        s = stencil_1d(filled.u_bar, filled.v_bar)
        hl, hr = _hweno_traces(filled.u_bar, s, cells, model, gamma, eps)
        left[:, cells] = hl
        right[:, cells] = hr
    return left, right, inner


def count_nonphysical(model, *point_sets):
    """Número de pontos reconstruídos com densidade ou pressão não positivas (só Euler)."""
    if not model.is_system:
        return 0
    bad = 0
    for q in point_sets:
        bad += int(np.count_nonzero((q[0] <= 0.0) | (model.pressure(q) <= 0.0)))
    return bad


def rhs_1d(field, grid, bc, model, trouble, t=0.0, *, alpha=None, gamma, eps, diagnostics=None):
    """
    Derivadas temporais de todos os momentos (zero nas células fantasma).

    :param trouble: TroubleMap do passo, ou None para o esquema linear.
    :param alpha: velocidade do fluxo LF; por omissão max |f'| nas médias interiores.
    :param diagnostics: dicionário opcional onde se acumula `nonphysical_points`.
    """
    filled = fill_ghosts(field, grid, bc, t, model)
    g, n, dx = grid.n_ghost, grid.n_cells, grid.dx
    left, right, inner = reconstruct_1d(filled, grid, trouble, model, gamma, eps)

    if alpha is None:
        alpha = wavespeed_bound(filled.u_bar[:, grid.interior], model)

    # faces g-1/2 .. g+n-1/2: traço direito da célula à esquerda, esquerdo da célula à direita
    u_minus = right[:, g - 2:g - 1 + n]
    u_plus = left[:, g - 1:g + n]
    fhat = lax_friedrichs(u_minus, u_plus, model.flux_x, alpha)

    own = slice(g - 1, g - 1 + n)
    nodes = np.stack([left[:, own], inner[0][:, own], inner[1][:, own], right[:, own]], axis=-1)
    volume = GAUSS_LOBATTO_4.average(model.flux_x(nodes))

    out = MomentField.zeros(model.n_vars, grid.shape)
    out.u_bar[:, grid.interior] = -(fhat[:, 1:] - fhat[:, :-1]) / dx
    out.v_bar[:, grid.interior] = -(fhat[:, :-1] + fhat[:, 1:]) / (2.0 * dx) + volume / dx

    if not out.is_finite():
        bad = np.nonzero(~np.isfinite(out.u_bar[:, grid.interior]).all(axis=0))[0]
        raise NumericalStateError(f"Lado direito não finito em t={t:.6g}, células interiores {bad[:5].tolist()}")
    if diagnostics is not None:
        diagnostics["nonphysical_points"] = diagnostics.get("nonphysical_points", 0) + count_nonphysical(
            model, left[:, own], right[:, own], inner[0][:, own], inner[1][:, own])
    return out
