# tests/test_weights.py

import numpy as np
import pytest

from components import ConfigurationError
from reconstruction import EPSILON, LinearWeights, hweno_combine, nonlinear_weights


def test_pesos_por_omissao():
    np.testing.assert_allclose(LinearWeights.default(1).array, [0.98, 0.01, 0.01])
    np.testing.assert_allclose(LinearWeights.default(2).array, [0.96, 0.01, 0.01, 0.01, 0.01])
    np.testing.assert_allclose(LinearWeights.uniform(2).array, np.full(5, 0.2))


def test_pesos_aleatorios_reprodutiveis():
    a = LinearWeights.random(1, np.random.default_rng(7))
    b = LinearWeights.random(1, np.random.default_rng(7))
    assert a == b
    assert len(a) == 3
    assert abs(sum(a.values) - 1.0) <= 1e-14


@pytest.mark.parametrize("values", [(1.0,), (0.5, 0.6), (1.2, -0.1, -0.1), (0.5, 0.5, 0.0)])
def test_pesos_lineares_invalidos(values):
    with pytest.raises(ConfigurationError):
        LinearWeights(values)


def test_dimensao_nao_suportada():
    with pytest.raises(ConfigurationError):
        LinearWeights.default(3)


def test_pesos_nao_lineares_iguais_aos_lineares_para_betas_iguais():
    gamma = LinearWeights.default(1)
    omega = nonlinear_weights(np.full((3, 4), 2.5), gamma)
    np.testing.assert_allclose(omega, np.broadcast_to(gamma.array[:, None], (3, 4)))


def test_pesos_nao_lineares_convexos(rng):
    beta = rng.uniform(0.0, 10.0, size=(5, 50))
    omega = nonlinear_weights(beta, LinearWeights.default(2))
    assert np.all(omega >= 0.0)
    np.testing.assert_allclose(omega.sum(axis=0), 1.0, atol=1e-14)


def test_pesos_nao_lineares_formula():
    beta = np.array([4.0, 1.0, 0.0])
    gamma = np.array([0.98, 0.01, 0.01])
    tau = ((3.0 + 4.0) / 2.0) ** 2
    raw = gamma * (1.0 + tau / (beta + EPSILON))
    np.testing.assert_allclose(nonlinear_weights(beta, gamma), raw / raw.sum())


def test_combinacao_com_pesos_lineares_devolve_o_grau_alto():
    gamma = LinearWeights.default(1)
    values = np.array([[1.5, -2.0], [0.3, 7.0], [-4.0, 0.1]])
    omega = np.broadcast_to(gamma.array[:, None], (3, 2))
    np.testing.assert_allclose(hweno_combine(values, omega, gamma), values[0])


def test_combinacao_com_pontos_extra():
    gamma = LinearWeights.uniform(1)
    values = np.ones((3, 4, 2))
    omega = np.array([0.2, 0.3, 0.5])[:, None, None] * np.ones((3, 4, 1))
    out = hweno_combine(values, omega[..., 0], gamma)
    np.testing.assert_allclose(out, 1.0)
