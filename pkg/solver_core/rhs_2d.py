# solver_core/rhs_2d.py

"""
Lado direito semi-discreto 2D.

Com pesos w_k e nós g_k de Gauss de 3 pontos em cada aresta, f_L/f_R os
fluxos numéricos nas arestas esquerda/direita e g_B/g_T nas arestas
inferior/superior:

    du/dt = -sum w (f_R - f_L)/dx - sum w (g_T - g_B)/dy
    dv/dt = -sum w (f_L + f_R)/(2 dx) + F/dx - sum w g_k (g_T - g_B)/dy
    dw/dt = -sum w g_k (f_R - f_L)/dx - sum w (g_B + g_T)/(2 dy) + G/dy

F e G são as médias dos fluxos físicos na célula pela regra tensorial 3 x 3,
sempre com os valores lineares interiores.
"""

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.boundary import fill_ghosts
from components.errors import NumericalStateError
from components.moments import MomentField
from physics.flux import lax_friedrichs, wavespeed_bound
from physics.quadrature import GAUSS_3
from reconstruction.hermite_2d import hweno_interface_values, kernel_set
from .rhs_1d import count_nonphysical
from .traces import linear_traces_2d, stencil_2d

# lado -> (eixo da interface, deslocamento do vizinho)
_SIDE_NEIGHBOR = {0: (0, (-1, 0)), 1: (0, (1, 0)), 2: (1, (0, -1)), 3: (1, (0, 1))}


def _hweno_faces(filled, cells, model, kernel, gamma, eps):
    """
    Traços HWENO (4, 3, n_vars, c) nas células do núcleo `cells` = (ci, cj).

    Para sistemas, cada lado usa o sistema característico da média com o
    vizinho desse lado, na direção normal ao lado.
    """
    ci, cj = cells
    vec = stencil_2d(filled.u_bar, filled.v_bar, filled.w_bar)[:, ci, cj]  # (19, c, n_vars)
    if not model.is_system:
        return np.moveaxis(hweno_interface_values(vec, kernel, gamma, eps), -1, 2)

    gi, gj = ci + 1, cj + 1
    sides = []
    for side in range(4):
        axis, (da, db) = _SIDE_NEIGHBOR[side]
        left, right = model.interface_eigensystem(
            filled.u_bar[:, gi, gj], filled.u_bar[:, gi + da, gj + db], axis)
        char = np.einsum("cab,kcb->kca", left, vec)
        values = hweno_interface_values(char, kernel, gamma, eps)[side]  # (3, c, n_vars)
        sides.append(np.einsum("cab,pcb->pac", right, values))
    return np.stack(sides)


def reconstruct_2d(filled, grid, trouble, model, gamma, eps):
    """
    Traços em todas as células do núcleo.

    :return: (interface, interior) com formas (4, 3, n_vars, ncx, ncy) e (3, 3, n_vars, ncx, ncy).
    """
    kernel = kernel_set(grid.dx, grid.dy)
    face, inner = linear_traces_2d(filled.u_bar, filled.v_bar, filled.w_bar, kernel)
    if trouble is not None and np.any(trouble.stencil):
        offset = grid.n_ghost - 2
        cells = tuple(c + offset for c in np.nonzero(trouble.stencil))
        face[:, :, :, cells[0], cells[1]] = _hweno_faces(filled, cells, model, kernel, gamma, eps)
    return face, inner


def rhs_2d(field, grid, bc, model, trouble, t=0.0, *, alpha=None, beta=None, gamma, eps,
           solid=None, diagnostics=None):
    """
    Derivadas temporais de todos os momentos (zero nas células fantasma e sólidas).

    :param alpha, beta: velocidades LF em x e y; por omissão calculadas nas médias interiores.
    :param solid: máscara interior das células sólidas (degrau), ou None.
    """
    filled = fill_ghosts(field, grid, bc, t, model)
    g, nx, ny = grid.n_ghost, grid.nx, grid.ny
    face, inner = reconstruct_2d(filled, grid, trouble, model, gamma, eps)

    interior_states = filled.u_bar[(slice(None),) + grid.interior]
    if solid is not None:
        interior_states = interior_states[:, ~solid]
    if alpha is None:
        alpha = wavespeed_bound(interior_states, model, 0)
    if beta is None:
        beta = wavespeed_bound(interior_states, model, 1)

    ix, jy = slice(g - 1, g - 1 + nx), slice(g - 1, g - 1 + ny)
    # arestas verticais i-1/2 (nx + 1) e horizontais j-1/2 (ny + 1)
    fx = lax_friedrichs(np.moveaxis(face[1, :, :, g - 2:g - 1 + nx, jy], 1, 0),
                        np.moveaxis(face[0, :, :, g - 1:g + nx, jy], 1, 0), model.flux_x, alpha)
    gy = lax_friedrichs(np.moveaxis(face[3, :, :, ix, g - 2:g - 1 + ny], 1, 0),
                        np.moveaxis(face[2, :, :, ix, g - 1:g + ny], 1, 0), model.flux_y, beta)
    # fx: (n_vars, 3, nx + 1, ny), gy: (n_vars, 3, nx, ny + 1)
    f_l, f_r = fx[:, :, :-1, :], fx[:, :, 1:, :]
    g_b, g_t = gy[:, :, :, :-1], gy[:, :, :, 1:]

    w = GAUSS_3.w[None, :, None, None]
    node = GAUSS_3.xi[None, :, None, None]
    pts = np.moveaxis(inner[:, :, :, ix, jy], 2, 0)  # (n_vars, 3, 3, nx, ny)
    w2 = (GAUSS_3.w[:, None] * GAUSS_3.w[None, :])[None, :, :, None, None]
    vol_f = np.sum(w2 * model.flux_x(pts), axis=(1, 2))
    vol_g = np.sum(w2 * model.flux_y(pts), axis=(1, 2))

    dx, dy = grid.dx, grid.dy
    du = -np.sum(w * (f_r - f_l), axis=1) / dx - np.sum(w * (g_t - g_b), axis=1) / dy
    dv = (-np.sum(w * (f_l + f_r), axis=1) / (2.0 * dx) + vol_f / dx
          - np.sum(w * node * (g_t - g_b), axis=1) / dy)
    dw = (-np.sum(w * node * (f_r - f_l), axis=1) / dx
          - np.sum(w * (g_b + g_t), axis=1) / (2.0 * dy) + vol_g / dy)

    out = MomentField.zeros(model.n_vars, grid.shape)
    region = (slice(None),) + grid.interior
    out.u_bar[region], out.v_bar[region], out.w_bar[region] = du, dv, dw
    if solid is not None:
        for a in out.arrays():
            a[region][:, solid] = 0.0

    if not out.is_finite():
        bad = np.argwhere(~np.isfinite(du).all(axis=0))[:5]
        raise NumericalStateError(f"Lado direito não finito em t={t:.6g}, células interiores {bad.tolist()}")
    if diagnostics is not None:
        own = face[:, :, :, ix, jy]
        points = [np.moveaxis(own.reshape(12, model.n_vars, nx, ny), 1, 0),
                  pts.reshape(model.n_vars, 9, nx, ny)]
        if solid is not None:
            points = [p[:, :, ~solid] for p in points]
        diagnostics["nonphysical_points"] = diagnostics.get("nonphysical_points", 0) + count_nonphysical(
            model, *points)
    return out
