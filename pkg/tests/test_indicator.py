# tests/test_indicator.py

import numpy as np
import pytest

from components import BoundarySpec, Grid1, Grid2, MomentField, fill_ghosts, init_moments
from physics import make_model
from problems import get_problem
from solver_core import IndicatorMode, SchemeMode, kxrcf_flag, uniform_trouble_map
from solver_core.indicator import IndicatorMixin, dilate


def _flag_1d(field, grid, model, bc):
    return kxrcf_flag(fill_ghosts(field, grid, bc, 0.0, model), model, grid, bc=bc)


def test_campo_constante_nao_marcado(burgers1d):
    grid = Grid1(20, 0.0, 2.0)
    bc = BoundarySpec.uniform("periodic", 1)
    tmap = _flag_1d(init_moments(lambda x: 0.7 + 0.0 * x, grid), grid, burgers1d, bc)
    assert not tmap.any_troubled
    assert tmap.fraction == 0.0


def test_campo_suave_nao_marcado(burgers1d):
    grid = Grid1(80, 0.0, 2.0)
    bc = BoundarySpec.uniform("periodic", 1)
    tmap = _flag_1d(init_moments(lambda x: 0.5 + np.sin(np.pi * x), grid), grid, burgers1d, bc)
    assert not tmap.any_troubled


def test_degrau_marcado_perto_da_descontinuidade(burgers1d):
    grid = Grid1(40, 0.0, 2.0)
    bc = BoundarySpec.uniform("outflow", 1)
    field = init_moments(lambda x: np.where(x < 1.0, 2.0, 1.0), grid)
    tmap = _flag_1d(field, grid, burgers1d, bc)
    flagged = np.nonzero(tmap.troubled)[0]
    assert tmap.troubled[20]
    assert flagged.min() >= 18 and flagged.max() <= 22
    assert 0.0 < tmap.fraction <= 5 / 40


def test_contacto_de_euler_marcado(euler1d):
    grid = Grid1(50, 0.0, 1.0)
    bc = BoundarySpec.uniform("outflow", 1)
    u0 = lambda x: euler1d.conservative(np.where(x < 0.5, 1.0, 0.125), np.full_like(x, 0.5), np.ones_like(x))
    tmap = _flag_1d(init_moments(u0, grid), grid, euler1d, bc)
    assert tmap.troubled[25]
    assert not tmap.troubled[:20].any()


def test_descontinuidade_parada_marcada_dos_dois_lados(euler1d):
    # gás parado: as arestas com velocidade nula contam como entrada
    grid = Grid1(50, 0.0, 1.0)
    bc = BoundarySpec.uniform("reflective", 1)
    u0 = lambda x: euler1d.conservative(np.ones_like(x), np.zeros_like(x), np.where(x < 0.5, 1000.0, 0.01))
    tmap = _flag_1d(init_moments(u0, grid), grid, euler1d, bc)
    assert tmap.troubled[24] and tmap.troubled[25]
    assert not tmap.troubled[:22].any()
    assert not tmap.troubled[28:].any()


def test_choque_a_entrar_em_gas_parado(euler1d):
    problem = get_problem("shu_osher")
    grid = problem.make_grid()
    bc = problem.make_boundary(euler1d)
    field = init_moments(problem.initial_condition(euler1d), grid)
    tmap = _flag_1d(field, grid, euler1d, bc)
    # o choque está na aresta x = -4, entre as células 39 e 40; a célula 40 tem velocidade nula
    assert tmap.troubled[40]
    assert not tmap.troubled[45:].any()


def test_grau_maior_marca_mais_celulas(burgers1d):
    grid = Grid1(50, 0.0, 1.0)
    bc = BoundarySpec.uniform("outflow", 1)
    field = init_moments(lambda x: 1.5 + 0.5 * np.tanh((x - 0.5) / 0.03), grid)
    filled = fill_ghosts(field, grid, bc, 0.0, burgers1d)
    low = kxrcf_flag(filled, burgers1d, grid, bc=bc, degree=1)
    high = kxrcf_flag(filled, burgers1d, grid, bc=bc, degree=4)
    assert np.all(high.troubled >= low.troubled)
    assert high.troubled.sum() > low.troubled.sum()


def test_vacuo_nunca_marcado(burgers1d):
    grid = Grid1(10, 0.0, 1.0)
    bc = BoundarySpec.uniform("outflow", 1)
    tmap = _flag_1d(MomentField.zeros(1, grid.shape), grid, burgers1d, bc)
    assert not tmap.any_troubled


def test_dilatacao_periodica():
    troubled = np.zeros(10, dtype=bool)
    troubled[0] = True
    stencil = dilate(troubled, [True])
    assert stencil.shape == (12,)
    np.testing.assert_array_equal(np.nonzero(stencil)[0], [0, 1, 2, 10, 11])


def test_dilatacao_com_fronteira_nao_periodica():
    troubled = np.zeros(10, dtype=bool)
    troubled[0] = True
    np.testing.assert_array_equal(np.nonzero(dilate(troubled, [False]))[0], [0, 1, 2])


def test_dilatacao_2d():
    troubled = np.zeros((6, 5), dtype=bool)
    troubled[3, 2] = True
    stencil = dilate(troubled, [True, True])
    assert stencil.shape == (8, 7)
    assert stencil.sum() == 9
    assert stencil[3:6, 2:5].all()


def test_degrau_diagonal_2d(burgers2d):
    grid = Grid2(16, 16, 0.0, 4.0, 0.0, 4.0)
    bc = BoundarySpec.uniform("outflow", 2)
    field = init_moments(lambda x, y: np.where(x + y < 4.0, 2.0, 1.0), grid)
    tmap = kxrcf_flag(fill_ghosts(field, grid, bc, 0.0, burgers2d), burgers2d, grid, bc=bc)
    assert tmap.any_troubled
    # a marcação é simétrica na troca x <-> y
    np.testing.assert_array_equal(tmap.troubled, tmap.troubled.T)
    i, j = np.nonzero(tmap.troubled)
    assert np.all(np.abs(i + j - 15) <= 3)


def test_solido_nunca_marcado():
    grid = Grid1(6, 0.0, 1.0)
    bc = BoundarySpec.uniform("outflow", 1)
    fluid = np.array([True, True, True, False, False, True])
    tmap = uniform_trouble_map(grid, bc, True, fluid)
    np.testing.assert_array_equal(tmap.troubled, fluid)
    assert tmap.fraction == 1.0


class _Marker(IndicatorMixin):
    def __init__(self, kind):
        self.grid = Grid1(8, 0.0, 1.0)
        self.bc = BoundarySpec.uniform("periodic", 1)
        self.model = make_model("burgers1d")
        self.scheme = SchemeMode(kind=kind)
        self.fluid_mask = None


@pytest.mark.parametrize("kind, expected", [(IndicatorMode.FORCE_ALL, 1.0), (IndicatorMode.LINEAR_ONLY, 0.0)])
def test_modos_uniformes(kind, expected):
    marker = _Marker(kind)
    filled = fill_ghosts(init_moments(lambda x: np.where(x < 0.5, 1.0, 0.0), marker.grid),
                         marker.grid, marker.bc, 0.0, marker.model)
    assert marker.mark_troubled_cells(filled, 0.0).fraction == expected
