# solver_core/limiter.py

"""
Modificação dos primeiros momentos nas células problemáticas.

A modificação é feita ao estilo de Jacobi: todos os novos momentos são
calculados a partir do estado antes da modificação e só depois escritos.
Para sistemas, os dados do estêncil são projetados nas variáveis
características do estado médio da própria célula.
"""

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from reconstruction.hermite_1d import StencilData1, modify_first_moment


def _project(left, data):
    """Aplica L (c, a, b) a dados (s, c, b) -> (s, c, a)."""
    return np.einsum("cab,scb->sca", left, data)


def _back(right, data):
    """Aplica R (c, a, b) a dados (c, b) -> (c, a)."""
    return np.einsum("cab,cb->ca", right, data)


def _modify(stencil, model, states, axis, gamma, eps):
    """Primeiro momento modificado em cada célula; `stencil` tem forma (3, c, n_vars)."""
    if not model.is_system:
        return modify_first_moment(stencil, gamma, eps)
    left, right = model.eigensystem(states, axis)
    char = StencilData1(_project(left, stencil.u_bar), _project(left, stencil.v_bar))
    return _back(right, modify_first_moment(char, gamma, eps))


def modify_troubled_1d(filled, grid, model, trouble, gamma, eps):
    """
    Novo campo com v_bar modificado nas células interiores marcadas.

    :param filled: MomentField com fantasmas preenchidos.
    :param trouble: TroubleMap do passo.
    """
    out = filled.copy()
    cells = np.nonzero(trouble.troubled)[0] + grid.n_ghost
    if cells.size == 0:
        return out
    u = filled.u_bar.T
    v = filled.v_bar.T
    stencil = StencilData1(np.stack([u[cells - 1], u[cells], u[cells + 1]]),
                           np.stack([v[cells - 1], v[cells], v[cells + 1]]))
    model.check_physical(u[cells].T, "nas células problemáticas")
    out.v_bar[:, cells] = _modify(stencil, model, u[cells].T, 0, gamma, eps).T
    return out


def modify_troubled_2d(filled, grid, model, trouble, gamma, eps):
    """Novo campo com v_bar e w_bar modificados direção a direção nas células marcadas."""
    out = filled.copy()
    ii, jj = np.nonzero(trouble.troubled)
    if ii.size == 0:
        return out
    ii = ii + grid.n_ghost
    jj = jj + grid.n_ghost
    u, v, w = (np.moveaxis(a, 0, -1) for a in filled.arrays())
    row = StencilData1(np.stack([u[ii + d, jj] for d in (-1, 0, 1)]),
                       np.stack([v[ii + d, jj] for d in (-1, 0, 1)]))
    col = StencilData1(np.stack([u[ii, jj + d] for d in (-1, 0, 1)]),
                       np.stack([w[ii, jj + d] for d in (-1, 0, 1)]))
    states = u[ii, jj].T
    model.check_physical(states, "nas células problemáticas")
    out.v_bar[:, ii, jj] = _modify(row, model, states, 0, gamma, eps).T
    out.w_bar[:, ii, jj] = _modify(col, model, states, 1, gamma, eps).T
    return out

