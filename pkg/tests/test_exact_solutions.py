# tests/test_exact_solutions.py

import math

import numpy as np
import pytest

from components import ConfigurationError
from problems import (
    PrimitiveState, RiemannSolution, SineData, burgers1d_exact, burgers2d_exact, burgers_solution,
    euler_advection_density,
)

SOD = ((1.0, 0.0, 1.0), (0.125, 0.0, 0.1))
LAX = ((0.445, 0.698, 3.528), (0.5, 0.0, 0.571))


def test_estado_estrela_de_sod():
    solution = RiemannSolution.solve(*SOD)
    assert solution.p_star == pytest.approx(0.30313, rel=1e-4)
    assert solution.u_star == pytest.approx(0.92745, rel=1e-4)
    assert solution._star_density(solution.left) == pytest.approx(0.42632, rel=1e-4)
    assert solution._star_density(solution.right) == pytest.approx(0.26557, rel=1e-4)


def test_amostragem_de_sod():
    solution = RiemannSolution.solve(*SOD)
    x = np.array([-0.45, 0.1, 0.3, 0.45])
    rho, u, p = solution.sample(x, 0.2, x0=0.0)
    # regiões: esquerda intacta, estrela esquerda, estrela direita, direita intacta
    np.testing.assert_allclose(rho, [1.0, 0.42632, 0.26557, 0.125], rtol=1e-4)
    np.testing.assert_allclose(p[1:3], solution.p_star)
    np.testing.assert_allclose(u[[0, 3]], 0.0)


def test_leque_de_rarefacao_continuo():
    solution = RiemannSolution.solve(*SOD)
    a_l = math.sqrt(1.4)
    tail = solution.u_star - a_l * (solution.p_star / 1.0) ** (0.4 / 2.8)
    eps = 1e-9
    for s in (-a_l, tail):
        lo, hi = solution.sample(np.array([s - eps, s + eps]), 1.0)[0]
        assert lo == pytest.approx(hi, abs=1e-6)


def test_problema_de_lax_conserva_os_estados_extremos():
    solution = RiemannSolution.solve(*LAX)
    q = solution.conservative(np.array([-0.5, 0.5]), 0.16)
    left, right = PrimitiveState(*LAX[0]), PrimitiveState(*LAX[1])
    np.testing.assert_allclose(q[0], [left.rho, right.rho])
    np.testing.assert_allclose(q[1], [left.rho * left.u, 0.0], atol=1e-15)
    # pressão contínua através do contacto
    x = np.array([solution.u_star * 0.16 - 1e-6, solution.u_star * 0.16 + 1e-6])
    p = solution.sample(x, 0.16)[2]
    assert p[0] == pytest.approx(p[1])


def test_instante_inicial_devolve_o_degrau():
    solution = RiemannSolution.solve(*SOD)
    rho = solution.sample(np.array([-0.1, 0.1]), 0.0)[0]
    np.testing.assert_allclose(rho, [1.0, 0.125])


def test_vacuo_rejeitado():
    with pytest.raises(ConfigurationError):
        RiemannSolution.solve((1.0, -20.0, 1.0), (1.0, 20.0, 1.0))


def test_burgers_antes_do_choque_segue_as_caracteristicas():
    data = SineData()
    t = 0.5 / math.pi
    x = np.linspace(0.0, 2.0, 101)
    u = burgers_solution(data, x, t)
    np.testing.assert_allclose(u, data(x - u * t), atol=1e-12)


def test_burgers_depois_do_choque():
    data = SineData()
    t = 1.5 / math.pi
    shock = 1.0 + 0.5 * t
    u = burgers_solution(data, np.array([shock - 0.05, shock + 0.05]), t)
    assert u[0] - u[1] > 1.0
    lo, hi = data.bounds
    x = np.linspace(0.0, 2.0, 201)
    values = burgers_solution(data, x, t)
    assert values.min() >= lo - 1e-12 and values.max() <= hi + 1e-12


def test_burgers_2d_reduz_se_ao_1d():
    data = SineData()
    t = 0.3
    x = np.array([[0.1, 1.7], [2.2, 3.9]])
    y = np.array([[0.4, 0.2], [3.1, 0.5]])
    out = burgers2d_exact(data, t)(x, y)
    np.testing.assert_allclose(out[0], burgers_solution(data, 0.5 * (x + y), t))
    assert burgers1d_exact(data, t)(x[0]).shape == (1, 2)


def test_densidade_transportada():
    assert euler_advection_density(0.25, 0.0) == pytest.approx(1.0 + 0.2 * math.sin(math.pi / 4))
    np.testing.assert_allclose(euler_advection_density(np.array([0.3]), 2.0),
                               euler_advection_density(np.array([0.3]), 0.0))
