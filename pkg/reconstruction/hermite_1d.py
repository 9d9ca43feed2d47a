# reconstruction/hermite_1d.py

"""
Reconstrução Hermite 1D sobre o estêncil de três células {i-1, i, i+1}.

Dois conjuntos de candidatos, todos construídos a partir das condições de
momentos no arranque do módulo:

- modificação do primeiro momento: quártico p0 (três médias e os primeiros
  momentos vizinhos) e dois lineares p1, p2 (médias de {i-1, i} e {i, i+1});
- reconstrução nas interfaces: quíntico p0 (todos os seis dados) e dois
  quadráticos p1, p2 (duas médias mais o primeiro momento da célula alvo).

As funções aceitam StencilData1 com eixos extra à direita, de modo que uma
só chamada trata todas as células e variáveis de uma vez.
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
from functools import lru_cache
import math

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError, NumericalStateError
from .polynomial import Candidate1D
from .weights import EPSILON, LinearWeights, hweno_combine, nonlinear_weights

INTERNAL_NODE = math.sqrt(5.0) / 10.0


@dataclass(frozen=True)
class StencilData1:
    """Médias e primeiros momentos em (i-1, i, i+1), eixo 0 de tamanho 3."""

    u_bar: np.ndarray
    v_bar: np.ndarray

    def __post_init__(self):
        if np.shape(self.u_bar)[0] != 3 or np.shape(self.v_bar)[0] != 3:
            raise ConfigurationError("O estêncil 1D tem exatamente três células")

    @classmethod
    def of(cls, u_bar, v_bar):
        return cls(np.asarray(u_bar, dtype=float), np.asarray(v_bar, dtype=float))

    def vector(self):
        """Vetor (6, ...) na ordem [u_{-1}, u_0, u_1, v_{-1}, v_0, v_1]."""
        return np.concatenate([self.u_bar, self.v_bar], axis=0)

    def mirrored(self):
        """Estêncil refletido em torno de x_i: troca i-1 <-> i+1 e nega os primeiros momentos."""
        return StencilData1(self.u_bar[::-1], -self.v_bar[::-1])

    def require_finite(self):
        if not (np.all(np.isfinite(self.u_bar)) and np.all(np.isfinite(self.v_bar))):
            raise NumericalStateError("Estêncil 1D com valores não finitos")
        return self


@lru_cache(maxsize=None)
def modification_candidates():
    """(p0 quártico, p1 linear, p2 linear) usados para modificar v_i."""
    return (
        Candidate1D.from_conditions("modify-p0", [("u", -1), ("u", 0), ("u", 1), ("v", -1), ("v", 1)]),
        Candidate1D.from_conditions("modify-p1", [("u", -1), ("u", 0)]),
        Candidate1D.from_conditions("modify-p2", [("u", 0), ("u", 1)]),
    )


@lru_cache(maxsize=None)
def interface_candidates():
    """(p0 quíntico, p1 quadrático, p2 quadrático) usados nas interfaces."""
    return (
        Candidate1D.from_conditions(
            "interface-p0", [("u", -1), ("u", 0), ("u", 1), ("v", -1), ("v", 0), ("v", 1)]),
        Candidate1D.from_conditions("interface-p1", [("u", -1), ("u", 0), ("v", 0)]),
        Candidate1D.from_conditions("interface-p2", [("u", 0), ("u", 1), ("v", 0)]),
    )


@lru_cache(maxsize=None)
def _forms(which):
    cands = modification_candidates() if which == "modify" else interface_candidates()
    return np.stack([c.smoothness_form() for c in cands])


def _apply_row(row, vec):
    return np.tensordot(row, vec, axes=(0, 0))


def _betas(forms, vec):
    return np.einsum("k...,nkl,l...->n...", vec, forms, vec)


def smoothness_1d_moment(s):
    """(beta_0, beta_1, beta_2) dos candidatos de modificação; cada um >= 0."""
    return _betas(_forms("modify"), s.vector())


def smoothness_1d_interface(s):
    """(beta_0, beta_1, beta_2) dos candidatos de interface."""
    return _betas(_forms("interface"), s.vector())


def _as_weights(gamma):
    return gamma if isinstance(gamma, LinearWeights) else LinearWeights(tuple(gamma))


def modify_first_moment(s, gamma, eps=EPSILON):
    """
    Novo v_i da célula problemática por combinação HWENO dos três candidatos.

    Os candidatos q_n são os primeiros momentos de p0, p1, p2 na célula alvo.
    """
    gamma = _as_weights(gamma)
    vec = s.require_finite().vector()
    q = np.stack([_apply_row(c.first_moment_row(), vec) for c in modification_candidates()])
    omega = nonlinear_weights(_betas(_forms("modify"), vec), gamma, eps)
    return hweno_combine(q, omega, gamma)


def hweno_interface(s, side, gamma, eps=EPSILON):
    """
    Valor HWENO no bordo da célula alvo.

    - side = "right": u^-_{i+1/2}, avaliação dos candidatos em xi = 1/2.
    - side = "left":  u^+_{i-1/2}, o mesmo procedimento sobre o estêncil refletido.
    """
    gamma = _as_weights(gamma)
    if side == "left":
        return hweno_interface(s.mirrored(), "right", gamma, eps)
    if side != "right":
        raise ConfigurationError(f"Lado desconhecido: {side}")
    vec = s.require_finite().vector()
    cands = interface_candidates()
    values = np.stack([_apply_row(c.point_row(0.5), vec) for c in cands])
    omega = nonlinear_weights(_betas(_forms("interface"), vec), gamma, eps)
    return hweno_combine(values, omega, gamma)


def linear_interface(s, side):
    """p0 quíntico avaliado em xi = +1/2 (side="right") ou -1/2 (side="left")."""
    if side not in ("left", "right"):
        raise ConfigurationError(f"Lado desconhecido: {side}")
    xi = 0.5 if side == "right" else -0.5
    return _apply_row(interface_candidates()[0].point_row(xi), s.require_finite().vector())


def linear_internal(s):
    """Valores de p0 nos nós interiores de Gauss-Lobatto, xi = -sqrt(5)/10 e +sqrt(5)/10."""
    p0 = interface_candidates()[0]
    vec = s.require_finite().vector()
    return (_apply_row(p0.point_row(-INTERNAL_NODE), vec), _apply_row(p0.point_row(INTERNAL_NODE), vec))


def stencil_from_arrays(u_bar, v_bar, core):
    """
    StencilData1 das células `core` (fatia ao longo do último eixo espacial).

    `u_bar`/`v_bar` têm a célula no eixo 0; devolve dados com o eixo do
    estêncil à frente e as células em seguida.
    """
    start, stop = core.start, core.stop
    u = np.stack([u_bar[start - 1:stop - 1], u_bar[start:stop], u_bar[start + 1:stop + 1]])
    v = np.stack([v_bar[start - 1:stop - 1], v_bar[start:stop], v_bar[start + 1:stop + 1]])
    return StencilData1(u, v)
