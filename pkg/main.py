# Arquivo: main.py

import sys
import os
import json
import argparse
import logging

# --- NÚMERO DE THREADS ANTES DE IMPORTAR O NUMPY ---
# As bibliotecas BLAS/OpenMP leem estas variáveis apenas no primeiro import.
_threads = os.environ.get("HWENO_NUM_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ[_var] = _threads

from pydantic import ValidationError

# Módulos do projeto
from components import HwenoError, ConfigurationError, Grid1
from problems import get_problem, PROBLEMS
from actions import (
    ConfigActions, OutputActions, ReferenceActions, ConvergenceActions, BenchmarkActions,
    CellAverages, compare_to_reference, error_norms, exact_cell_averages,
)

logger = logging.getLogger("hweno")

# --- CONSTANTES GLOBAIS ---
LOG_FORMAT = "[%(levelname)s] %(message)s"
EXIT_OK = 0
EXIT_USAGE = 2

# chaves do RunConfig que podem vir da linha de comando
CLI_KEYS = (
    "problem", "cells", "cells_y", "meshes", "final_time", "mode", "gamma", "seed", "cfl", "dt_mode",
    "output_dir", "reference", "kxrcf_threshold", "kxrcf_degree", "epsilon",
)


# --- CLASSE PRINCIPAL ---
class HwenoHarness(ConfigActions, ConvergenceActions, BenchmarkActions, ReferenceActions, OutputActions):
    """
    Classe principal do programa, que integra a configuração, as execuções e a escrita dos resultados.
    """

    def __init__(self, config_path=None, overrides=None):
        self.config = None
        self.carregar_config(config_path, overrides)

    def problema(self):
        return get_problem(self.config.problem)

    def converge(self):
        """
        Estudo de convergência do problema configurado.

        Responsabilidades:
        - Usar as malhas da configuração (ou a malha por omissão, se não houver).
        - Escrever a tabela de erros e ordens e o relatório em JSON.
        """
        problem = self.problema()
        meshes = self.config.meshes or [problem.cells[0]]
        report = self.run_convergence(problem, meshes, self.config)
        table = report.format_table()
        sys.stdout.write(table)
        self.escrever_texto(f"{problem.name}_convergence.txt", table)
        self.escrever_texto(f"{problem.name}_convergence.json", json.dumps(report.as_dict(), indent=4) + "\n")
        return report

    def run(self):
        """Executa o problema configurado e escreve a solução, as marcas e o resumo."""
        result = self.run_benchmark(self.problema(), self.config)
        logger.info("Fração média de células marcadas: %.2f%%", 100.0 * result.run.mean_flagged_fraction)
        return result

    def compare(self, solution_path=None):
        """
        Compara uma solução 1D com a referência.

        Responsabilidades:
        - Usar a solução de um ficheiro, ou correr o problema configurado.
        - Usar a referência do ficheiro configurado, ou as médias exatas do problema.
        - Escrever as normas em `<problema>_errors.json`.
        """
        problem = self.problema()
        if problem.dim != 1:
            raise ConfigurationError("A comparação com referência só existe para problemas 1D")
        model = problem.make_model()
        if solution_path is not None:
            try:
                solution = CellAverages.from_file(solution_path)
            except FileNotFoundError:
                raise ConfigurationError(f"Ficheiro de solução não encontrado: {solution_path}") from None
            if self.config.reference is not None:
                norms = compare_to_reference(solution, self.carregar_referencia(self.config.reference))
            else:
                grid = Grid1(solution.n_cells, solution.x_lo, solution.x_hi)
                t = self.config.final_time or problem.final_time
                exact = exact_cell_averages(problem, model, grid, t)
                norms = error_norms(solution.values[0], exact[0, grid.interior])
        else:
            result = self.run_benchmark(problem, self.config)
            norms = self.comparar_solucao(problem, result.model, result.grid, result.run.field,
                                          result.run.t, self.config.reference)
        self.escrever_texto(f"{problem.name}_errors.json",
                            json.dumps({"l1": norms.l1, "linf": norms.linf}, indent=4) + "\n")
        sys.stdout.write(f"L1 = {norms.l1:.6e}\nLinf = {norms.linf:.6e}\n")
        return norms


def listar_problemas():
    """Escreve os problemas registados, um por linha."""
    for name, spec in PROBLEMS.items():
        sys.stdout.write(f"{name:<16} {spec.title}\n")
    return len(PROBLEMS)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="ficheiro de configuração chave = valor")
    common.add_argument("--problem")
    common.add_argument("--cells", type=int)
    common.add_argument("--cells-y", dest="cells_y", type=int)
    common.add_argument("--final-time", dest="final_time", type=float)
    common.add_argument("--mode", help="new-hybrid, new-hweno ou linear")
    common.add_argument("--gamma", help="default, uniform ou random")
    common.add_argument("--seed", type=int)
    common.add_argument("--cfl", type=float)
    common.add_argument("--dt-mode", dest="dt_mode", choices=("production", "accuracy"))
    common.add_argument("--output-dir", dest="output_dir")
    common.add_argument("--reference")
    common.add_argument("--kxrcf-threshold", dest="kxrcf_threshold", type=float)
    common.add_argument("--kxrcf-degree", dest="kxrcf_degree", type=int)
    common.add_argument("--epsilon", type=float)
    common.add_argument("--no-progress", dest="progress", action="store_const", const=False)
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="hweno", description="Esquema HWENO híbrido de volumes finitos")
    sub = parser.add_subparsers(dest="command", required=True)
    converge = sub.add_parser("converge", parents=[common], help="estudo de convergência")
    converge.add_argument("--meshes", help="lista de malhas, por exemplo 40,80,160")
    sub.add_parser("run", parents=[common], help="executa um problema e escreve os resultados")
    compare = sub.add_parser("compare", parents=[common], help="compara uma solução 1D com a referência")
    compare.add_argument("--solution", help="ficheiro de solução já calculada")
    sub.add_parser("list-problems", help="lista os problemas registados")
    return parser


def cli_main(argv=None):
    """
    Ponto de entrada da linha de comando.

    :return: 0 em caso de sucesso, 2 para erros de utilização ou de configuração.
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
                        format=LOG_FORMAT, force=True)
    if args.command == "list-problems":
        listar_problemas()
        return EXIT_OK

    overrides = {key: getattr(args, key, None) for key in CLI_KEYS}
    overrides["progress"] = args.progress
    try:
        harness = HwenoHarness(args.config, overrides)
        if args.command == "converge":
            harness.converge()
        elif args.command == "run":
            harness.run()
        else:
            harness.compare(args.solution)
    except ValidationError as exc:
        for error in exc.errors():
            logger.error("Configuração inválida (%s): %s", ".".join(map(str, error["loc"])) or "-", error["msg"])
        return EXIT_USAGE
    except HwenoError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(cli_main())
