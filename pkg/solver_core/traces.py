# solver_core/traces.py

"""
Traços lineares (polinómio de grau alto) em todas as células do núcleo.

O núcleo é o interior mais uma camada fantasma de cada lado: são as células
cujos traços entram nos fluxos das faces interiores. Todos os arrays
devolvidos têm as variáveis à frente das dimensões espaciais.
"""

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from reconstruction.hermite_1d import linear_interface, linear_internal, stencil_from_arrays
from reconstruction.hermite_2d import (
    linear_interface_values, linear_interior_values, stencil2_from_arrays,
)


def core_slice_1d(n_total):
    return slice(1, n_total - 1)


def core_slices_2d(shape):
    return (slice(1, shape[0] - 1), slice(1, shape[1] - 1))


def stencil_1d(u_bar, v_bar):
    """StencilData1 (3, n_core, n_vars) de todas as células do núcleo."""
    return stencil_from_arrays(u_bar.T, v_bar.T, core_slice_1d(u_bar.shape[-1]))


def linear_traces_1d(u_bar, v_bar):
    """
    Traços lineares 1D.

    :return: (u_left, u_right, internos) com formas (n_vars, n_core) e
        (2, n_vars, n_core); u_left é u^+_{i-1/2} e u_right é u^-_{i+1/2}.
    """
    s = stencil_1d(u_bar, v_bar)
    left = linear_interface(s, "left").T
    right = linear_interface(s, "right").T
    inner = np.stack([a.T for a in linear_internal(s)])
    return left, right, inner


def stencil_2d(u_bar, v_bar, w_bar):
    """Vetor (19, ncx, ncy, n_vars) do estêncil em todas as células do núcleo."""
    moved = [np.moveaxis(a, 0, -1) for a in (u_bar, v_bar, w_bar)]
    return stencil2_from_arrays(*moved, core_slices_2d(u_bar.shape[1:]))


def linear_traces_2d(u_bar, v_bar, w_bar, kernel):
    """
    Traços lineares 2D.

    :return: (interface, interior) com formas (4, 3, n_vars, ncx, ncy) e
        (3, 3, n_vars, ncx, ncy).
    """
    vec = stencil_2d(u_bar, v_bar, w_bar)
    face = np.moveaxis(linear_interface_values(vec, kernel), -1, 2)
    inner = np.moveaxis(linear_interior_values(vec, kernel), -1, 2)
    return face, inner
