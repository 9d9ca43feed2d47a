# components/errors.py

"""
Hierarquia de exceções do HwenoLab.

Todas as falhas previstas pelo solver derivam de `HwenoError`, o que permite
ao `main.py` traduzi-las num código de saída sem esconder erros de programação.
"""


class HwenoError(Exception):
    """Base de todas as falhas previstas pelo solver."""


class ConfigurationError(HwenoError, ValueError):
    """Configuração inconsistente: fronteiras, pesos, problema ou malha inválidos."""


class NumericalStateError(HwenoError, ArithmeticError):
    """Estado numérico inválido (NaN, densidade ou pressão não positivas)."""


class ConstructionError(HwenoError, RuntimeError):
    """Falha ao montar um núcleo de reconstrução (sistema singular)."""
