# actions/output_actions.py

"""
Este módulo contém o mixin OutputActions, responsável pela escrita dos
ficheiros de resultados.

As suas responsabilidades incluem:
- Escrever sempre de forma atómica (ficheiro temporário na mesma pasta e `os.replace`).
- Soluções 1D em colunas: x, médias e primeiros momentos de cada variável, marca.
- Campos 2D numa grelha autodescrita (cabeçalho com nx, ny e extensão, valores por linhas).
- Níveis de contorno, histórico das células marcadas e o resumo `summary.json`.
"""

# --- Imports da Biblioteca Padrão ---
import io
import json
import logging
import os
from pathlib import Path
import tempfile

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError

logger = logging.getLogger(__name__)

NUMBER_FORMAT = "%.16e"
GRID_MAGIC = "# hweno-grid 1"


def atomic_write_text(path, text):
    """Escreve `text` em `path` via ficheiro temporário e renomeação."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def _table_text(columns, header):
    buffer = io.StringIO()
    np.savetxt(buffer, np.column_stack(columns), fmt=NUMBER_FORMAT, header=header)
    return buffer.getvalue()


def variable_names(model):
    if not model.is_system:
        return ["u"]
    return ["rho", "mx", "E"] if model.dim == 1 else ["rho", "mx", "my", "E"]


def solution_1d_text(grid, field, model, flags=None):
    """Tabela 1D: x, <var>_bar, <var>_v e flag (0/1) por célula interior."""
    names = variable_names(model)
    inner = field.u_bar[:, grid.interior], field.v_bar[:, grid.interior]
    flags = np.zeros(grid.n_cells) if flags is None else np.asarray(flags, dtype=float)
    columns = [grid.interior_centers, *inner[0], *inner[1], flags]
    header = ["x"] + [f"{n}_bar" for n in names] + [f"{n}_v" for n in names] + ["flag"]
    return _table_text(columns, f"x_lo={grid.x_lo!r} x_hi={grid.x_hi!r}\n" + " ".join(header))


def read_solution_1d(path):
    """
    Lê uma tabela escrita por `solution_1d_text`.

    :return: (x_lo, x_hi, nomes, valores) com valores (n_vars, n) das médias.
    :raises ConfigurationError: ficheiro sem o cabeçalho esperado.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if len(lines) < 2 or not lines[0].startswith("# x_lo="):
        raise ConfigurationError(f"{path} não é uma solução 1D deste programa")
    extent = dict(item.split("=") for item in lines[0][2:].split())
    header = lines[1][2:].split()
    data = np.loadtxt(path, ndmin=2)
    names = [h[:-4] for h in header if h.endswith("_bar")]
    values = np.stack([data[:, header.index(f"{n}_bar")] for n in names])
    return float(extent["x_lo"]), float(extent["x_hi"]), names, values


def grid_2d_text(grid, values, name):
    """Grelha 2D: cabeçalho autodescrito e `ny` linhas (de baixo para cima) com `nx` valores."""
    values = np.asarray(values, dtype=float)
    if values.shape != (grid.nx, grid.ny):
        raise ConfigurationError(f"Campo {name} com forma {values.shape}, esperado {(grid.nx, grid.ny)}")
    header = (f"{GRID_MAGIC}\n# variable = {name}\n# nx = {grid.nx}\n# ny = {grid.ny}\n"
              f"# extent = {grid.x_lo!r} {grid.x_hi!r} {grid.y_lo!r} {grid.y_hi!r}\n")
    buffer = io.StringIO()
    np.savetxt(buffer, values.T, fmt=NUMBER_FORMAT)
    return header + buffer.getvalue()


def read_grid_2d(path):
    """:return: (metadados, valores (nx, ny))."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != GRID_MAGIC:
        raise ConfigurationError(f"{path} não é uma grelha 2D deste programa")
    meta = {}
    for line in lines[1:5]:
        key, value = (p.strip() for p in line[1:].split("=", 1))
        meta[key] = value
    data = np.loadtxt(path, comments="#", ndmin=2)
    return meta, data.T


class OutputActions:
    """
    Mixin com a escrita dos resultados de uma execução em `self.config.output_path`.
    """

    def caminho_saida(self, name):
        return self.config.output_path / name

    def escrever_texto(self, name, text):
        path = atomic_write_text(self.caminho_saida(name), text)
        logger.info("Ficheiro escrito: %s", path)
        return path

    def escrever_solucao_1d(self, name, grid, field, model, flags=None):
        return self.escrever_texto(name, solution_1d_text(grid, field, model, flags))

    def escrever_grelha_2d(self, name, grid, values, variable):
        return self.escrever_texto(name, grid_2d_text(grid, values, variable))

    def escrever_contornos(self, name, contours):
        """Níveis de contorno igualmente espaçados (mínimo, máximo, número)."""
        lo, hi, n = contours
        levels = np.linspace(lo, hi, int(n))
        return self.escrever_texto(name, "".join(f"{v:.6f}\n" for v in levels))

    def escrever_historico(self, name, flag_history):
        """Duas colunas: tempo no fim do passo e fração de células marcadas."""
        data = np.array(flag_history, dtype=float).reshape(-1, 2)
        buffer = io.StringIO()
        np.savetxt(buffer, data, fmt=NUMBER_FORMAT, header="t flagged_fraction")
        return self.escrever_texto(name, buffer.getvalue())

    def escrever_resumo(self, summary, name="summary.json"):
        return self.escrever_texto(name, json.dumps(summary, indent=4, sort_keys=True) + "\n")
