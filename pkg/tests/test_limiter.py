# tests/test_limiter.py

import numpy as np

from components import BoundarySpec, Grid1, Grid2, fill_ghosts, init_moments
from reconstruction import LinearWeights
from solver_core import modify_troubled_1d, modify_troubled_2d, uniform_trouble_map
from solver_core.indicator import build_trouble_map

GAMMA = LinearWeights.default(1)
EPS = 1e-6


def _filled(u0, grid, model, kind="outflow"):
    bc = BoundarySpec.uniform(kind, grid.dim)
    return bc, fill_ghosts(init_moments(u0, grid), grid, bc, 0.0, model)


def test_dados_lineares_nao_mudam(burgers1d):
    grid = Grid1(10, 0.0, 1.0)
    bc, filled = _filled(lambda x: (2.0 * x + 1.0)[None], grid, burgers1d)
    out = modify_troubled_1d(filled, grid, burgers1d, uniform_trouble_map(grid, bc, True), GAMMA, EPS)
    inner = slice(grid.n_ghost + 1, grid.n_ghost + grid.n_cells - 1)
    np.testing.assert_allclose(out.v_bar[0, inner], 2.0 * grid.dx / 12.0, atol=1e-13)


def test_sistema_linear_nas_variaveis_conservadas(euler1d):
    grid = Grid1(10, 0.0, 1.0)
    bc, filled = _filled(lambda x: euler1d.conservative(1.0 + 0.5 * x, 0.2 + 0.1 * x, 1.0 + x), grid, euler1d)
    # estado com momentos lineares exatos
    centers = grid.centers
    filled.u_bar[:] = np.stack([1.0 + 0.5 * centers, 0.3 * centers, 2.0 + centers])
    filled.v_bar[:] = (np.array([0.5, 0.3, 1.0]) * grid.dx / 12.0)[:, None]
    out = modify_troubled_1d(filled, grid, euler1d, uniform_trouble_map(grid, bc, True), GAMMA, EPS)
    np.testing.assert_allclose(out.v_bar, filled.v_bar, atol=1e-13)


def test_celulas_nao_marcadas_intactas(rng, burgers1d):
    grid = Grid1(12, 0.0, 1.0)
    bc = BoundarySpec.uniform("periodic", 1)
    field = init_moments(lambda x: np.sin(2 * np.pi * x)[None], grid)
    field.v_bar[:] = rng.normal(size=field.v_bar.shape)
    filled = fill_ghosts(field, grid, bc, 0.0, burgers1d)
    troubled = np.zeros(12, dtype=bool)
    troubled[5] = True
    out = modify_troubled_1d(filled, grid, burgers1d, build_trouble_map(troubled, bc, 1), GAMMA, EPS)
    changed = np.nonzero(out.v_bar[0] != filled.v_bar[0])[0]
    np.testing.assert_array_equal(changed, [5 + grid.n_ghost])
    assert out.v_bar is not filled.v_bar


def test_modificacao_2d_direcao_a_direcao(burgers2d):
    grid = Grid2(6, 6, 0.0, 1.0, 0.0, 1.0)
    bc, filled = _filled(lambda x, y: (1.0 + 3.0 * x - 2.0 * y)[None], grid, burgers2d)
    out = modify_troubled_2d(filled, grid, burgers2d, uniform_trouble_map(grid, bc, True), GAMMA, EPS)
    inner = (slice(grid.n_ghost + 1, grid.n_ghost + 5),) * 2
    np.testing.assert_allclose(out.v_bar[(0,) + inner], 3.0 * grid.dx / 12.0, atol=1e-13)
    np.testing.assert_allclose(out.w_bar[(0,) + inner], -2.0 * grid.dy / 12.0, atol=1e-13)
