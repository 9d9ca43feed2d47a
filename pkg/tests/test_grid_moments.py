# tests/test_grid_moments.py

import numpy as np
import pytest

from components import ConfigurationError, Grid1, Grid2, MomentField, NumericalStateError, init_moments


def test_grid1_geometria():
    grid = Grid1(10, 0.0, 1.0)
    assert grid.dx == pytest.approx(0.1)
    assert grid.shape == (14,)
    assert grid.interior == slice(2, 12)
    np.testing.assert_allclose(grid.interior_centers, 0.05 + 0.1 * np.arange(10))
    assert grid.centers[0] == pytest.approx(-0.15)


def test_grid2_geometria():
    grid = Grid2(4, 2, 0.0, 4.0, 0.0, 1.0)
    assert (grid.dx, grid.dy) == (1.0, 0.5)
    assert grid.shape == (8, 6)
    x, y = grid.mesh()
    assert x.shape == grid.shape
    assert x[2, 0] == pytest.approx(0.5)
    assert y[0, 2] == pytest.approx(0.25)


@pytest.mark.parametrize("kwargs", [
    dict(n_cells=0, x_lo=0.0, x_hi=1.0),
    dict(n_cells=4, x_lo=1.0, x_hi=1.0),
    dict(n_cells=4, x_lo=0.0, x_hi=1.0, n_ghost=1),
])
def test_grid1_invalida(kwargs):
    with pytest.raises(ConfigurationError):
        Grid1(**kwargs)


def test_grid2_invalida():
    with pytest.raises(ConfigurationError):
        Grid2(4, 4, 0.0, 1.0, 1.0, 0.0)


def test_momentos_de_x_na_celula_unitaria():
    grid = Grid1(1, 0.0, 1.0)
    field = init_moments(lambda x: x, grid)
    assert field.u_bar[0, 2] == pytest.approx(0.5)
    assert field.v_bar[0, 2] == pytest.approx(1.0 / 12.0)


def test_momentos_de_quadratico():
    grid = Grid1(8, -1.0, 3.0)
    field = init_moments(lambda x: x * x, grid)
    xc, dx = grid.centers, grid.dx
    # média de x^2 = xc^2 + dx^2/12; momento = 2 xc dx / 12
    np.testing.assert_allclose(field.u_bar[0], xc ** 2 + dx ** 2 / 12.0, atol=1e-14)
    np.testing.assert_allclose(field.v_bar[0], xc * dx / 6.0, atol=1e-14)


def test_momentos_2d_separaveis():
    grid = Grid2(3, 5, 0.0, 3.0, 0.0, 1.0)
    field = init_moments(lambda x, y: x + 2.0 * y, grid)
    x, y = grid.mesh()
    np.testing.assert_allclose(field.u_bar[0], x + 2.0 * y, atol=1e-14)
    np.testing.assert_allclose(field.v_bar[0], np.full(grid.shape, grid.dx / 12.0), atol=1e-14)
    np.testing.assert_allclose(field.w_bar[0], np.full(grid.shape, 2.0 * grid.dy / 12.0), atol=1e-14)


def test_momentos_de_sistema_mantem_eixo_das_variaveis():
    grid = Grid1(5, 0.0, 1.0)
    field = init_moments(lambda x: np.stack([np.ones_like(x), x, x * x]), grid)
    assert field.u_bar.shape == (3, 9)
    assert field.n_vars == 3 and field.dim == 1


def test_quadratura_inicial_pobre_rejeitada():
    with pytest.raises(ConfigurationError):
        init_moments(lambda x: x, Grid1(4, 0.0, 1.0), quadrature_order=3)


def test_aritmetica_do_campo():
    a = MomentField.zeros(2, (6,))
    a.u_bar += 1.0
    b = a.copy()
    b.v_bar += 2.0
    c = 0.5 * a + b * 2.0 - a
    np.testing.assert_allclose(c.u_bar, 1.5)
    np.testing.assert_allclose(c.v_bar, 4.0)
    assert a.v_bar.max() == 0.0


def test_campo_nao_finito():
    field = MomentField.zeros(1, (3, 3))
    assert field.w_bar is not None
    field.w_bar[0, 1, 1] = np.nan
    assert not field.is_finite()
    with pytest.raises(NumericalStateError):
        field.require_finite("no teste")
