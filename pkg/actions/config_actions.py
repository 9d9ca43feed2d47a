# actions/config_actions.py

"""
Este módulo contém o modelo RunConfig e o mixin ConfigActions, responsáveis
pela configuração de uma execução.

As suas responsabilidades incluem:
- Ler ficheiros de texto `chave = valor` (comentários com `#`, linhas vazias ignoradas).
- Validar a configuração com pydantic (problema registado, CFL positivo,
  semente obrigatória para pesos aleatórios, malhas crescentes).
- Combinar as fontes pela ordem: valores por omissão, ficheiro, linha de comando.
"""

# --- Imports da Biblioteca Padrão ---
import logging
from pathlib import Path
from typing import Literal

# --- Imports de Terceiros ---
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError
from problems import get_problem
from solver_core import KXRCF_DEGREE, GammaChoice, IndicatorMode, SchemeMode

logger = logging.getLogger(__name__)

DEFAULT_OUTPUT_DIR = "saida"


class RunConfig(BaseModel):
    """Configuração completa de uma execução (todas as chaves aceites no ficheiro)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    problem: str = "burgers1d"
    cells: int | None = Field(default=None, gt=0)
    cells_y: int | None = Field(default=None, gt=0)
    meshes: list[int] | None = None
    final_time: float | None = Field(default=None, gt=0)
    mode: str = "new-hybrid"
    gamma: str = GammaChoice.DEFAULT.value
    seed: int | None = None
    cfl: float = Field(default=0.6, gt=0)
    dt_mode: Literal["production", "accuracy"] | None = None
    output_dir: str = DEFAULT_OUTPUT_DIR
    reference: str | None = None
    reflag_each_stage: bool = False
    alpha_per_stage: bool = True
    kxrcf_threshold: float = Field(default=1.0, gt=0)
    kxrcf_degree: int = Field(default=KXRCF_DEGREE, ge=0)
    epsilon: float = Field(default=1e-6, gt=0)
    progress: bool = True
    positivity_check: bool = True

    @field_validator("problem")
    @classmethod
    def _problem_registered(cls, value):
        try:
            get_problem(value)
        except ConfigurationError as exc:
            raise ValueError(str(exc)) from None
        return value

    @field_validator("mode")
    @classmethod
    def _mode_known(cls, value):
        try:
            IndicatorMode.parse(value)
        except ConfigurationError as exc:
            raise ValueError(str(exc)) from None
        return value

    @field_validator("gamma")
    @classmethod
    def _gamma_known(cls, value):
        try:
            GammaChoice.parse(value)
        except ConfigurationError as exc:
            raise ValueError(str(exc)) from None
        return value

    @field_validator("meshes", mode="before")
    @classmethod
    def _split_meshes(cls, value):
        if isinstance(value, str):
            return [int(v) for v in value.replace(" ", "").split(",") if v]
        return value

    @field_validator("meshes")
    @classmethod
    def _meshes_ascending(cls, value):
        if value is None:
            return value
        if not value or any(n <= 0 for n in value):
            raise ValueError("As malhas têm de ser inteiros positivos")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError(f"As malhas têm de ser estritamente crescentes: {value}")
        return value

    @model_validator(mode="after")
    def _random_needs_seed(self):
        if GammaChoice.parse(self.gamma) == GammaChoice.RANDOM and self.seed is None:
            raise ValueError("Pesos lineares aleatórios precisam de uma semente (seed)")
        return self

    def scheme_mode(self):
        """SchemeMode correspondente às chaves do esquema."""
        return SchemeMode(
            kind=IndicatorMode.parse(self.mode), gamma=GammaChoice.parse(self.gamma),
            epsilon=self.epsilon, cfl=self.cfl, kxrcf_threshold=self.kxrcf_threshold,
            kxrcf_degree=self.kxrcf_degree, reflag_each_stage=self.reflag_each_stage,
            alpha_per_stage=self.alpha_per_stage,
        )

    @property
    def output_path(self):
        return Path(self.output_dir)


def parse_config_text(text):
    """
    Converte o texto `chave = valor` num dicionário de strings.

    :raises ConfigurationError: linha sem `=` ou chave repetida.
    """
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"Linha {number} da configuração sem '=': {raw.strip()}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in values:
            raise ConfigurationError(f"Chave repetida na configuração: {key}")
        if value:
            values[key] = value
    return values


class ConfigActions:
    """
    Mixin que carrega e valida a configuração de uma execução.
    """

    def carregar_config(self, path=None, overrides=None):
        """
        Constrói o RunConfig a partir do ficheiro (opcional) e das opções da linha de comando.

        - Um ficheiro em falta não interrompe a execução: regista-se um aviso e
          usam-se os valores por omissão.
        - `overrides` com valor None são ignorados.
        """
        values = {}
        if path is not None:
            try:
                values.update(parse_config_text(Path(path).read_text(encoding="utf-8")))
                logger.info("Configuração lida de %s", path)
            except FileNotFoundError:
                logger.warning("Ficheiro de configuração %s não encontrado; a usar valores por omissão", path)
        values.update({k: v for k, v in (overrides or {}).items() if v is not None})
        self.config = RunConfig(**values)
        return self.config
