# tests/conftest.py

import sys
from pathlib import Path

import numpy as np
import pytest

# o projeto não é instalado: os pacotes são importados a partir da raiz
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from components import BoundarySpec, Grid1, Grid2  # noqa: E402
from physics import make_model  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def periodic_grid_1d():
    return Grid1(40, 0.0, 2.0)


@pytest.fixture
def periodic_bc_1d():
    return BoundarySpec.uniform("periodic", 1)


@pytest.fixture
def periodic_grid_2d():
    return Grid2(16, 16, 0.0, 4.0, 0.0, 4.0)


@pytest.fixture
def periodic_bc_2d():
    return BoundarySpec.uniform("periodic", 2)


@pytest.fixture
def burgers1d():
    return make_model("burgers1d")


@pytest.fixture
def burgers2d():
    return make_model("burgers2d")


@pytest.fixture
def euler1d():
    return make_model("euler1d")


@pytest.fixture
def euler2d():
    return make_model("euler2d")


def gauss_cell_moments_1d(poly, offsets, n_points=8):
    """Médias e primeiros momentos de `poly(xi)` nas células de deslocamento `offsets`, por quadratura."""
    nodes, weights = np.polynomial.legendre.leggauss(n_points)
    u, v = [], []
    for j in offsets:
        xi = j + 0.5 * nodes
        vals = poly(xi)
        u.append(0.5 * np.sum(weights * vals))
        v.append(0.5 * np.sum(weights * vals * (xi - j)))
    return np.array(u), np.array(v)


def gauss_cell_moments_2d(poly, offset, n_points=8):
    """(média, momento em xi, momento em eta) de `poly(xi, eta)` na célula de deslocamento `offset`."""
    nodes, weights = np.polynomial.legendre.leggauss(n_points)
    a, b = offset
    xi, eta = np.meshgrid(a + 0.5 * nodes, b + 0.5 * nodes, indexing="ij")
    w = 0.25 * weights[:, None] * weights[None, :]
    vals = poly(xi, eta)
    return np.sum(w * vals), np.sum(w * vals * (xi - a)), np.sum(w * vals * (eta - b))
