# tests/test_boundary.py

import math

import numpy as np
import pytest

from components import (
    DMR_POST_SHOCK, DMR_PRE_SHOCK, BoundarySpec, ConfigurationError, Grid1, Grid2, MomentField,
    SideCondition, dmr_shock_x, euler2d_conservative, fill_ghosts, obstacle_mask,
)
from physics import make_model


def _ramp_1d(grid, n_vars=1):
    field = MomentField.zeros(n_vars, grid.shape)
    k = np.arange(grid.shape[0], dtype=float)
    for var in range(n_vars):
        field.u_bar[var] = k + 10.0 * var
        field.v_bar[var] = 0.01 * k + var
    return field


def test_periodico_1d():
    grid = Grid1(6, 0.0, 1.0)
    field = _ramp_1d(grid)
    out = fill_ghosts(field, grid, BoundarySpec.uniform("periodic", 1))
    g, n = grid.n_ghost, grid.n_cells
    np.testing.assert_array_equal(out.u_bar[:, :g], field.u_bar[:, n:n + g])
    np.testing.assert_array_equal(out.u_bar[:, g + n:], field.u_bar[:, g:2 * g])
    np.testing.assert_array_equal(out.v_bar[:, :g], field.v_bar[:, n:n + g])
    # o campo de entrada não é alterado
    assert field.u_bar[0, 0] == 0.0


def test_saida_livre_copia_a_ultima_celula():
    grid = Grid1(5, 0.0, 1.0)
    field = _ramp_1d(grid)
    out = fill_ghosts(field, grid, BoundarySpec.uniform("outflow", 1))
    np.testing.assert_array_equal(out.u_bar[0, :2], [2.0, 2.0])
    np.testing.assert_array_equal(out.u_bar[0, -2:], [6.0, 6.0])


def test_parede_refletora_euler_1d():
    grid = Grid1(5, 0.0, 1.0)
    model = make_model("euler1d")
    field = _ramp_1d(grid, 3)
    out = fill_ghosts(field, grid, BoundarySpec.uniform("reflective", 1), model=model)
    g = grid.n_ghost
    # fantasma g-1-k espelha o interior g+k
    for k in range(g):
        ghost, src = g - 1 - k, g + k
        np.testing.assert_allclose(out.u_bar[:, ghost], field.u_bar[:, src] * [1.0, -1.0, 1.0])
        np.testing.assert_allclose(out.v_bar[:, ghost], field.v_bar[:, src] * [-1.0, 1.0, -1.0])


def test_entrada_impoe_estado_com_momentos_nulos():
    grid = Grid1(4, 0.0, 1.0)
    state = (1.0, 2.0, 3.0)
    bc = BoundarySpec(SideCondition.of("inflow", state), SideCondition.of("outflow"))
    out = fill_ghosts(_ramp_1d(grid, 3), grid, bc, model=make_model("euler1d"))
    np.testing.assert_array_equal(out.u_bar[:, 0], state)
    np.testing.assert_array_equal(out.v_bar[:, :2], 0.0)


def test_cantos_2d_preenchidos_por_periodicidade():
    grid = Grid2(4, 3, 0.0, 1.0, 0.0, 1.0)
    field = MomentField.zeros(1, grid.shape)
    x, y = grid.mesh()
    field.u_bar[0] = np.sin(2 * math.pi * x) + np.cos(2 * math.pi * y)
    out = fill_ghosts(field, grid, BoundarySpec.uniform("periodic", 2))
    np.testing.assert_allclose(out.u_bar[0], np.sin(2 * math.pi * x) + np.cos(2 * math.pi * y), atol=1e-12)


def test_dmr_topo_segue_o_choque():
    model = make_model("euler2d")
    grid = Grid2(24, 6, 0.0, 4.0, 0.0, 1.0)
    bc = BoundarySpec(SideCondition.of("outflow"), SideCondition.of("outflow"),
                      SideCondition.of("dmr_bottom"), SideCondition.of("dmr_top"))
    t = 0.2
    out = fill_ghosts(MomentField.zeros(4, grid.shape), grid, bc, t, model)
    post = euler2d_conservative(*DMR_POST_SHOCK)
    pre = euler2d_conservative(*DMR_PRE_SHOCK)
    x, y = grid.mesh()
    top = slice(grid.n_ghost + grid.ny, None)
    # a posição do choque é x_s(y, t) = 1/6 + (y + 20 t)/sqrt(3)
    x_shock = 1.0 / 6.0 + (y[:, top] + 20.0 * t) / math.sqrt(3.0)
    np.testing.assert_allclose(dmr_shock_x(y[:, top], t), x_shock)
    expected = np.where(x[:, top] < x_shock, post[:, None, None], pre[:, None, None])
    np.testing.assert_allclose(out.u_bar[:, :, top], expected)
    np.testing.assert_array_equal(out.v_bar[:, :, top], 0.0)


def test_dmr_fundo_estado_pos_choque_antes_de_um_sexto():
    model = make_model("euler2d")
    grid = Grid2(24, 6, 0.0, 4.0, 0.0, 1.0)
    bc = BoundarySpec(SideCondition.of("outflow"), SideCondition.of("outflow"),
                      SideCondition.of("dmr_bottom"), SideCondition.of("dmr_top"))
    field = MomentField.zeros(4, grid.shape)
    field.u_bar[:] = euler2d_conservative(*DMR_PRE_SHOCK)[:, None, None]
    field.u_bar[2] = 0.3
    out = fill_ghosts(field, grid, bc, 0.0, model)
    cols = grid.centers_x < 1.0 / 6.0
    post = euler2d_conservative(*DMR_POST_SHOCK)
    np.testing.assert_allclose(out.u_bar[:, cols, :2], np.broadcast_to(post[:, None, None], (4, cols.sum(), 2)))
    # parede refletora no resto do fundo: momento normal (y) muda de sinal
    far = ~cols
    np.testing.assert_allclose(out.u_bar[2][far, :2], -0.3)


def test_mascara_do_degrau():
    grid = Grid2(24, 8, 0.0, 3.0, 0.0, 1.0)
    bc = BoundarySpec.uniform("reflective", 2)
    assert obstacle_mask(grid, bc) is None
    bc = BoundarySpec(bc.left, bc.right, bc.bottom, bc.top, step_corner=(0.6, 0.2))
    mask = obstacle_mask(grid, bc)
    x, y = grid.mesh()
    np.testing.assert_array_equal(mask, (x > 0.6) & (y < 0.2))
    assert mask[grid.interior].sum() == 19 * 2


@pytest.mark.parametrize("bc, dim, n_vars", [
    (BoundarySpec(SideCondition.of("periodic"), SideCondition.of("outflow")), 1, 1),
    (BoundarySpec(SideCondition.of("inflow"), SideCondition.of("outflow")), 1, 3),
    (BoundarySpec(SideCondition.of("inflow", (1.0, 0.0)), SideCondition.of("outflow")), 1, 3),
    (BoundarySpec.uniform("outflow", 2), 1, 1),
    (BoundarySpec.uniform("outflow", 1), 2, 1),
    (BoundarySpec(SideCondition.of("dmr_bottom"), SideCondition.of("outflow"),
                  SideCondition.of("outflow"), SideCondition.of("outflow")), 2, 4),
    (BoundarySpec(SideCondition.of("outflow"), SideCondition.of("outflow"),
                  SideCondition.of("dmr_bottom"), SideCondition.of("dmr_top")), 2, 1),
    (BoundarySpec(SideCondition.of("outflow"), SideCondition.of("outflow"), step_corner=(0.5, 0.5)), 1, 1),
])
def test_especificacoes_invalidas(bc, dim, n_vars):
    with pytest.raises(ConfigurationError):
        bc.validate(dim, n_vars)


def test_tipo_de_fronteira_desconhecido():
    with pytest.raises(ValueError):
        SideCondition.of("absorbing")
