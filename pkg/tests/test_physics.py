# tests/test_physics.py

import numpy as np
import pytest

from components import ConfigurationError, NumericalStateError
from physics import (
    GAUSS_3, GAUSS_LOBATTO_4, gauss_legendre, lax_friedrichs, make_model, wavespeed_bound,
)


def _jacobian(flux, q, h=1e-6):
    """Jacobiano do fluxo por diferenças centradas."""
    n = q.size
    jac = np.empty((n, n))
    for k in range(n):
        dq = np.zeros(n)
        dq[k] = h * max(1.0, abs(q[k]))
        jac[:, k] = (flux(q + dq) - flux(q - dq)) / (2.0 * dq[k])
    return jac


@pytest.mark.parametrize("rule", [GAUSS_LOBATTO_4, GAUSS_3])
def test_quadraturas_exatas_ate_grau_cinco(rule):
    for k in range(6):
        exact = ((0.5) ** (k + 1) - (-0.5) ** (k + 1)) / (k + 1)
        assert rule.average(rule.xi ** k) == pytest.approx(exact, abs=1e-15)
    assert rule.w.sum() == pytest.approx(1.0)


def test_gauss_legendre_normalizada():
    rule = gauss_legendre(5)
    assert rule.average(rule.xi ** 8) == pytest.approx(1.0 / (9 * 2 ** 8))


def test_fluxos_de_burgers():
    model = make_model("burgers2d")
    q = np.array([[1.0, -2.0]])
    np.testing.assert_allclose(model.flux_x(q), [[0.5, 2.0]])
    np.testing.assert_allclose(model.flux_y(q), model.flux_x(q))
    assert wavespeed_bound(q, model) == 2.0
    assert wavespeed_bound(q, model, 1) == 2.0


def test_fluxo_de_euler_1d():
    model = make_model("euler1d")
    q = model.conservative(1.2, 0.5, 2.0)
    rho, u, p = 1.2, 0.5, 2.0
    energy = p / 0.4 + 0.5 * rho * u * u
    np.testing.assert_allclose(model.flux_x(q), [rho * u, rho * u * u + p, u * (energy + p)])
    assert model.pressure(q) == pytest.approx(p)
    np.testing.assert_allclose(model.primitive(q), [rho, u, p])


@pytest.mark.parametrize("name, prim, axis", [
    ("euler1d", (1.0, 0.3, 1.0), 0),
    ("euler1d", (0.125, -2.0, 0.1), 0),
    ("euler2d", (1.4, 0.7, 1.0, -0.4), 0),
    ("euler2d", (1.4, 0.7, 1.0, -0.4), 1),
])
def test_sistema_caracteristico_diagonaliza_o_jacobiano(name, prim, axis):
    model = make_model(name)
    if model.dim == 1:
        q = model.conservative(*prim)
    else:
        rho, u, p, v = prim
        q = model.conservative(rho, u, p, v)
    left, right = model.eigensystem(q, axis)
    np.testing.assert_allclose(left @ right, np.eye(model.n_vars), atol=1e-12)
    jac = _jacobian(lambda s: model.flux(s, axis), q)
    diag = left @ jac @ right
    vel = model.velocity(q, axis)
    c = model.sound_speed(q)
    expected = [vel - c, vel, vel + c] if model.dim == 1 else [vel - c, vel, vel, vel + c]
    np.testing.assert_allclose(np.diag(diag), expected, atol=1e-6)
    np.testing.assert_allclose(diag - np.diag(np.diag(diag)), 0.0, atol=1e-6)


def test_sistema_caracteristico_vetorizado():
    model = make_model("euler1d")
    q = model.conservative(np.array([1.0, 0.5]), np.array([0.0, 1.0]), np.array([1.0, 0.4]))
    left, right = model.eigensystem(q)
    assert left.shape == (2, 3, 3)
    np.testing.assert_allclose(left @ right, np.broadcast_to(np.eye(3), (2, 3, 3)), atol=1e-12)


def test_sistema_na_media_da_interface():
    model = make_model("euler1d")
    a = model.conservative(1.0, 0.0, 1.0)
    b = model.conservative(0.125, 0.0, 0.1)
    left, right = model.interface_eigensystem(a, b)
    expected_l, _ = model.eigensystem(0.5 * (a + b))
    np.testing.assert_allclose(left, expected_l)


def test_sistema_na_media_rejeita_pressao_negativa():
    bad = np.array([1.0, 0.0, -1.0])
    with pytest.raises(NumericalStateError):
        make_model("euler1d").interface_eigensystem(bad, bad)


def test_estado_nao_fisico():
    model = make_model("euler1d")
    with pytest.raises(NumericalStateError):
        model.check_physical(np.array([[-1.0], [0.0], [1.0]]))


def test_lax_friedrichs_consistente():
    model = make_model("burgers1d")
    u = np.array([[0.3, -1.2]])
    np.testing.assert_allclose(lax_friedrichs(u, u, model.flux_x, 5.0), model.flux_x(u))
    fhat = lax_friedrichs(np.array([[1.0]]), np.array([[0.0]]), model.flux_x, 1.0)
    assert fhat[0, 0] == pytest.approx(0.25 + 0.5)


def test_limite_de_velocidade_de_onda():
    model = make_model("euler1d")
    states = [model.conservative(1.0, 0.0, 1.0), model.conservative(1.0, -2.0, 1.0)]
    assert wavespeed_bound(states, model) == pytest.approx(2.0 + np.sqrt(1.4))
    with pytest.raises(ConfigurationError):
        wavespeed_bound([], model)


def test_modelo_desconhecido():
    with pytest.raises(ConfigurationError):
        make_model("navier_stokes")
