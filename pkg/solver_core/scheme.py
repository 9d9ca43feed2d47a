# solver_core/scheme.py

"""
Modos do esquema e escolha dos pesos lineares.

Nomes de modo aceites (os da linha de comando à esquerda):
- new-hybrid / hybrid: indicador KXRCF decide onde modificar e onde usar HWENO;
- new-hweno / force_all_troubled: todas as células são tratadas como problemáticas;
- linear / linear_only: nenhuma célula é marcada (esquema linear puro).
"""

# --- Imports da Biblioteca Padrão ---
from dataclasses import dataclass
from enum import Enum

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError
from reconstruction.weights import EPSILON, LinearWeights

DEFAULT_CFL = 0.6
# grau k da escala h^((k+1)/2) do indicador; k + 1 é a ordem dos traços
KXRCF_DEGREE = 4


class IndicatorMode(str, Enum):
    HYBRID = "hybrid"
    FORCE_ALL = "force_all_troubled"
    LINEAR_ONLY = "linear_only"

    @classmethod
    def parse(cls, name):
        aliases = {"new-hybrid": cls.HYBRID, "new-hweno": cls.FORCE_ALL, "linear": cls.LINEAR_ONLY}
        if isinstance(name, cls):
            return name
        if name in aliases:
            return aliases[name]
        try:
            return cls(name)
        except ValueError:
            raise ConfigurationError(f"Modo desconhecido: {name}") from None


class GammaChoice(str, Enum):
    DEFAULT = "default"
    UNIFORM = "uniform"
    RANDOM = "random"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise ConfigurationError(f"Escolha de pesos lineares desconhecida: {name}") from None


@dataclass(frozen=True)
class SchemeMode:
    """
    Parâmetros do esquema partilhados pelo indicador, pelo limitador e pelo integrador.

    - `reflag_each_stage`: recalcula as marcas em cada estágio RK (por omissão só no primeiro).
    - `alpha_per_stage`: alpha/beta do fluxo LF recalculados em cada estágio.
    - `kxrcf_degree`: grau k na escala h^((k+1)/2) do indicador KXRCF.
    """

    kind: IndicatorMode = IndicatorMode.HYBRID
    gamma: GammaChoice = GammaChoice.DEFAULT
    epsilon: float = EPSILON
    cfl: float = DEFAULT_CFL
    kxrcf_threshold: float = 1.0
    kxrcf_degree: int = KXRCF_DEGREE
    reflag_each_stage: bool = False
    alpha_per_stage: bool = True

    def __post_init__(self):
        object.__setattr__(self, "kind", IndicatorMode.parse(self.kind))
        object.__setattr__(self, "gamma", GammaChoice.parse(self.gamma))
        if not self.cfl > 0:
            raise ConfigurationError(f"CFL tem de ser positivo (recebido {self.cfl})")
        if not self.epsilon > 0:
            raise ConfigurationError("epsilon tem de ser positivo")
        if not self.kxrcf_threshold > 0:
            raise ConfigurationError("O limiar do indicador tem de ser positivo")
        if self.kxrcf_degree < 0:
            raise ConfigurationError(f"Grau do indicador inválido: {self.kxrcf_degree}")

    def linear_weights(self, dim, rng=None):
        """
        Pesos para (reconstrução, modificação do momento) numa dada dimensão.

        Em 2D a reconstrução usa 5 pesos e a modificação, feita direção a
        direção, usa os 3 pesos do caso 1D.
        """
        if self.gamma == GammaChoice.RANDOM:
            if rng is None:
                raise ConfigurationError("Pesos aleatórios precisam de um gerador com semente")
            return LinearWeights.random(dim, rng), LinearWeights.random(1, rng)
        if self.gamma == GammaChoice.UNIFORM:
            return LinearWeights.uniform(dim), LinearWeights.uniform(1)
        return LinearWeights.default(dim), LinearWeights.default(1)
