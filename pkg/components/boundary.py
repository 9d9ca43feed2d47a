# components/boundary.py

"""
Condições de fronteira e preenchimento das células fantasma.

Tipos suportados por lado: periódica, refletora, entrada (estado fixo),
saída (gradiente nulo) e as duas fronteiras específicas da dupla reflexão de
Mach (`dmr_bottom`, `dmr_top`). O degrau do túnel de vento é tratado como uma
região sólida cartesiana cujas células são preenchidas por espelhamento nas
duas paredes que se encontram no canto.

Regras de espelhamento numa parede normal ao eixo `a`:
- u_bar é copiado do espelho, com o momento normal negado;
- o primeiro momento ao longo de `a` troca de sinal (o peso (x - x_i)/dx é ímpar);
- as duas regras compõem-se, portanto o primeiro momento ao longo de `a` do
  momento normal mantém o sinal.
"""

# --- Imports da Biblioteca Padrão ---
import math
from dataclasses import dataclass
from enum import Enum

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from .errors import ConfigurationError

# --- Dupla reflexão de Mach: choque de Mach 10 a 60 graus a partir de x = 1/6 ---
DMR_X0 = 1.0 / 6.0
DMR_POST_SHOCK = (8.0, 8.25 * math.cos(math.pi / 6.0), -8.25 * math.sin(math.pi / 6.0), 116.5)
DMR_PRE_SHOCK = (1.4, 0.0, 0.0, 1.0)
DMR_GAMMA = 1.4


def dmr_shock_x(y, t):
    """Posição x do choque oblíquo de Mach 10 à altura y no instante t."""
    return DMR_X0 + (y + 20.0 * t) / math.sqrt(3.0)


def euler2d_conservative(rho, u, v, p, gamma=DMR_GAMMA):
    """Estado conservado (rho, rho*u, rho*v, E) a partir das variáveis primitivas."""
    return np.array([rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)])


class BoundaryKind(str, Enum):
    PERIODIC = "periodic"
    REFLECTIVE = "reflective"
    INFLOW = "inflow"
    OUTFLOW = "outflow"
    DMR_BOTTOM = "dmr_bottom"
    DMR_TOP = "dmr_top"


@dataclass(frozen=True)
class SideCondition:
    """Condição num lado do domínio; `state` é o estado conservado para entradas."""

    kind: BoundaryKind
    state: tuple | None = None

    @classmethod
    def of(cls, kind, state=None):
        return cls(BoundaryKind(kind), None if state is None else tuple(float(s) for s in state))


@dataclass(frozen=True)
class BoundarySpec:
    """
    Conjunto de condições de fronteira de um problema.

    `step_corner`, quando presente, é o canto (x0, y0) de um degrau sólido que
    ocupa x > x0, y < y0 (túnel de vento com degrau).
    """

    left: SideCondition
    right: SideCondition
    bottom: SideCondition | None = None
    top: SideCondition | None = None
    step_corner: tuple | None = None

    @classmethod
    def uniform(cls, kind, dim):
        """Mesma condição (sem estado) em todos os lados."""
        side = SideCondition.of(kind)
        if dim == 1:
            return cls(side, side)
        return cls(side, side, side, side)

    def sides(self):
        """Trios (eixo, lado, condição) com lado 0 = mínimo e 1 = máximo."""
        out = [(0, 0, self.left), (0, 1, self.right)]
        if self.bottom is not None:
            out += [(1, 0, self.bottom), (1, 1, self.top)]
        return out

    def is_periodic(self, axis):
        cond = self.left if axis == 0 else self.bottom
        return cond is not None and cond.kind == BoundaryKind.PERIODIC

    def validate(self, dim, n_vars):
        """
        Verifica a consistência da especificação e devolve-a.

        - Lados periódicos têm de vir aos pares.
        - `dmr_bottom`/`dmr_top` só existem no fundo/topo de um problema Euler 2D.
        - Entradas precisam de um estado com `n_vars` componentes.
        """
        if dim == 2 and (self.bottom is None or self.top is None):
            raise ConfigurationError("Problemas 2D precisam das condições inferior e superior")
        if dim == 1 and (self.bottom is not None or self.top is not None):
            raise ConfigurationError("Problemas 1D só aceitam as condições esquerda e direita")
        pairs = [(self.left, self.right)]
        if dim == 2:
            pairs.append((self.bottom, self.top))
        for lo, hi in pairs:
            if (lo.kind == BoundaryKind.PERIODIC) != (hi.kind == BoundaryKind.PERIODIC):
                raise ConfigurationError("Condição periódica tem de ser emparelhada com o lado oposto")
        for axis, side, cond in self.sides():
            if cond.kind == BoundaryKind.DMR_BOTTOM and (axis, side) != (1, 0):
                raise ConfigurationError("dmr_bottom só é válida na fronteira inferior")
            if cond.kind == BoundaryKind.DMR_TOP and (axis, side) != (1, 1):
                raise ConfigurationError("dmr_top só é válida na fronteira superior")
            if cond.kind in (BoundaryKind.DMR_BOTTOM, BoundaryKind.DMR_TOP) and n_vars != 4:
                raise ConfigurationError("As fronteiras dmr_* só existem para a dupla reflexão de Mach")
            if cond.kind == BoundaryKind.INFLOW and (cond.state is None or len(cond.state) != n_vars):
                raise ConfigurationError("Condição de entrada sem estado compatível")
        if self.step_corner is not None and dim != 2:
            raise ConfigurationError("O degrau só existe em problemas 2D")
        return self


# --- Utilitários de indexação (o eixo 0 dos arrays é o das variáveis) ---
def _sl(ndim, axis, sel):
    idx = [slice(None)] * ndim
    idx[axis + 1] = sel
    return tuple(idx)


def _mirror_signs(n_vars, normal, axis, moment_axis):
    """
    Sinais por variável aplicados a um momento espelhado numa parede normal a `axis`.

    `moment_axis` é None para u_bar, ou o eixo do peso do primeiro momento.
    """
    s = np.ones(n_vars)
    if normal is not None:
        s[normal] = -1.0
    if moment_axis == axis:
        s = -s
    return s


def _constant_state(arrays, index, state):
    """Escreve um estado constante (primeiros momentos nulos) nas células `index`."""
    arrays[0][index] = state
    for a in arrays[1:]:
        a[index] = 0.0


def _fill_side(arrays, n_interior, n_ghost, axis, side, cond, normal, ctx):
    """
    Preenche as camadas fantasma de um lado para todos os momentos.

    `arrays` podem ser vistas parciais (em 2D, as linhas interiores); `ctx`
    traz a malha e o instante para as fronteiras dependentes da posição.
    """
    g, n = n_ghost, n_interior
    ndim = arrays[0].ndim
    dim = ndim - 1
    ghost = slice(0, g) if side == 0 else slice(g + n, 2 * g + n)
    kind = cond.kind

    if kind == BoundaryKind.PERIODIC:
        src = slice(n, n + g) if side == 0 else slice(g, 2 * g)
        for a in arrays:
            a[_sl(ndim, axis, ghost)] = a[_sl(ndim, axis, src)]
        return

    if kind == BoundaryKind.OUTFLOW:
        edge = slice(g, g + 1) if side == 0 else slice(g + n - 1, g + n)
        for a in arrays:
            a[_sl(ndim, axis, ghost)] = a[_sl(ndim, axis, edge)]
        return

    if kind == BoundaryKind.INFLOW:
        state = np.asarray(cond.state).reshape((-1,) + (1,) * dim)
        _constant_state(arrays, _sl(ndim, axis, ghost), state)
        return

    if kind in (BoundaryKind.REFLECTIVE, BoundaryKind.DMR_BOTTOM):
        # fantasma g-1-k <- interior g+k à esquerda; simétrico à direita
        src = slice(g, 2 * g) if side == 0 else slice(n, g + n)
        n_vars = arrays[0].shape[0]
        for m, a in enumerate(arrays):
            s = _mirror_signs(n_vars, normal, axis, None if m == 0 else m - 1)
            mirrored = np.flip(a[_sl(ndim, axis, src)], axis=axis + 1)
            a[_sl(ndim, axis, ghost)] = s.reshape((-1,) + (1,) * dim) * mirrored
        if kind == BoundaryKind.DMR_BOTTOM:
            # de x = 0 a x = 1/6 impõe-se o estado pós-choque exato
            post = euler2d_conservative(*DMR_POST_SHOCK)
            cols = ctx["grid"].centers_x < DMR_X0
            _constant_state(arrays, (slice(None), cols, ghost), post[:, None, None])
        return

    if kind == BoundaryKind.DMR_TOP:
        grid, t = ctx["grid"], ctx["t"]
        post = euler2d_conservative(*DMR_POST_SHOCK)
        pre = euler2d_conservative(*DMR_PRE_SHOCK)
        x, y = grid.mesh()
        behind = x[:, ghost] < dmr_shock_x(y[:, ghost], t)
        arrays[0][:, :, ghost] = np.where(behind[None], post[:, None, None], pre[:, None, None])
        for a in arrays[1:]:
            a[:, :, ghost] = 0.0
        return

    raise ConfigurationError(f"Tipo de fronteira desconhecido: {kind}")


def obstacle_mask(grid, bc):
    """Máscara booleana (fantasmas incluídos) das células sólidas do degrau, ou None."""
    if bc.step_corner is None:
        return None
    x0, y0 = bc.step_corner
    x, y = grid.mesh()
    return (x > x0) & (y < y0)


def _fill_obstacle(arrays, grid, bc, model):
    """
    Preenche as células do degrau por espelho numa das duas paredes.

    Uma célula sólida a `a` colunas da face vertical e `b` linhas abaixo do
    topo do degrau copia a célula espelhada na face se a <= b, e no topo caso
    contrário; as fontes do espelho são sempre células de fluido.
    """
    x0, y0 = bc.step_corner
    i_wall = int(np.searchsorted(grid.centers_x, x0))
    j_wall = int(np.searchsorted(grid.centers_y, y0))
    ii, jj = np.nonzero(obstacle_mask(grid, bc))
    a = ii - i_wall
    b = j_wall - 1 - jj
    use_x = (a <= b) & (i_wall - 1 - a >= 0)
    src_i = np.where(use_x, i_wall - 1 - a, ii)
    src_j = np.where(use_x, jj, np.minimum(j_wall + b, grid.shape[1] - 1))
    n_vars = arrays[0].shape[0]
    for axis, pick in ((0, use_x), (1, ~use_x)):
        normal = None if model is None else model.normal_momentum_index(axis)
        for m, arr in enumerate(arrays):
            s = _mirror_signs(n_vars, normal, axis, None if m == 0 else m - 1)
            arr[:, ii[pick], jj[pick]] = s[:, None] * arr[:, src_i[pick], src_j[pick]]


def fill_ghosts(field, grid, bc, t=0.0, model=None):
    """
    Devolve uma cópia do campo com as células fantasma preenchidas.

    - Em 2D preenchem-se primeiro os lados em x (só nas linhas interiores) e
      depois os lados em y sobre todas as colunas, o que preenche os cantos.
    - `model` fornece o índice do momento normal usado nas paredes refletoras;
      sem modelo o campo é tratado como escalar.
    - A região sólida do degrau, se existir, é preenchida por último.
    """
    out = field.copy()
    arrays = out.arrays()
    ctx = {"grid": grid, "t": t}

    def normal(axis):
        return None if model is None else model.normal_momentum_index(axis)

    if grid.dim == 1:
        for axis, side, cond in bc.sides():
            _fill_side(arrays, grid.n_cells, grid.n_ghost, axis, side, cond, normal(axis), ctx)
        return out

    rows = tuple(a[:, :, grid.interior[1]] for a in arrays)
    for axis, side, cond in bc.sides():
        if axis == 0:
            _fill_side(rows, grid.nx, grid.n_ghost, 0, side, cond, normal(0), ctx)
    for axis, side, cond in bc.sides():
        if axis == 1:
            _fill_side(arrays, grid.ny, grid.n_ghost, 1, side, cond, normal(1), ctx)
    if bc.step_corner is not None:
        _fill_obstacle(arrays, grid, bc, model)
    return out
