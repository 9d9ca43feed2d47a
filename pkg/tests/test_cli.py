# tests/test_cli.py

import json

import pytest

from main import cli_main


def _run_lax(out_dir, *extra):
    return cli_main(["run", "--problem", "lax", "--cells", "40", "--final-time", "0.01",
                     "--output-dir", str(out_dir), "--no-progress", *extra])


def test_lista_de_problemas(capsys):
    assert cli_main(["list-problems"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 11
    assert lines[0].split()[0] == "burgers1d"
    assert lines[-1].split()[0] == "step"


@pytest.mark.parametrize("argv", [
    [],
    ["fly"],
    ["run", "--bogus"],
    ["run", "--problem", "kelvin_helmholtz"],
    ["run", "--gamma", "random"],
    ["run", "--cfl", "-1"],
    ["converge", "--meshes", "80,40"],
])
def test_erros_de_utilizacao(argv):
    assert cli_main(argv) == 2


def test_execucao_escreve_resultados(tmp_path):
    assert _run_lax(tmp_path) == 0
    for name in ("lax_solution.dat", "lax_flag_history.dat", "summary.json"):
        assert (tmp_path / name).is_file()
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["problem"] == "lax"
    assert summary["cells"] == [40]
    assert summary["final_time"] == pytest.approx(0.01)
    assert summary["nonphysical_points"] == 0


def test_execucao_2d_escreve_grelhas(tmp_path):
    argv = ["run", "--problem", "burgers2d_shock", "--cells", "12", "--final-time", "0.05",
            "--output-dir", str(tmp_path), "--no-progress"]
    assert cli_main(argv) == 0
    for name in ("burgers2d_shock_u.grid", "burgers2d_shock_flags.grid", "burgers2d_shock_flag_history.dat"):
        assert (tmp_path / name).is_file()


def test_execucoes_repetidas_sao_identicas(tmp_path):
    assert _run_lax(tmp_path / "a") == 0
    assert _run_lax(tmp_path / "b") == 0
    for name in ("lax_solution.dat", "summary.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_comparacao_com_solucao_exata(tmp_path, capsys):
    argv = ["compare", "--problem", "sod", "--cells", "50", "--final-time", "0.05",
            "--output-dir", str(tmp_path), "--no-progress"]
    assert cli_main(argv) == 0
    errors = json.loads((tmp_path / "sod_errors.json").read_text(encoding="utf-8"))
    assert 0.0 < errors["l1"] < 0.05
    assert errors["l1"] <= errors["linf"]
    assert "L1 =" in capsys.readouterr().out


def test_comparacao_de_ficheiro_de_solucao(tmp_path):
    assert _run_lax(tmp_path) == 0
    argv = ["compare", "--problem", "lax", "--final-time", "0.01", "--solution", str(tmp_path / "lax_solution.dat"),
            "--output-dir", str(tmp_path)]
    assert cli_main(argv) == 0
    assert (tmp_path / "lax_errors.json").is_file()


def test_comparacao_contra_referencia_propria(tmp_path):
    assert _run_lax(tmp_path) == 0
    solution = str(tmp_path / "lax_solution.dat")
    argv = ["compare", "--problem", "lax", "--solution", solution, "--reference", solution,
            "--output-dir", str(tmp_path)]
    assert cli_main(argv) == 0
    errors = json.loads((tmp_path / "lax_errors.json").read_text(encoding="utf-8"))
    assert errors["linf"] < 1e-12


@pytest.mark.parametrize("argv", [
    ["compare", "--problem", "dmr"],
    ["compare", "--problem", "lax", "--solution", "nao_existe.dat"],
    ["converge", "--problem", "dmr", "--meshes", "8,16"],
])
def test_pedidos_impossiveis(tmp_path, argv):
    assert cli_main(argv + ["--output-dir", str(tmp_path), "--no-progress"]) == 2


def test_estudo_de_convergencia(tmp_path, capsys):
    argv = ["converge", "--problem", "burgers1d", "--meshes", "10,20", "--final-time", "0.05",
            "--output-dir", str(tmp_path), "--no-progress"]
    assert cli_main(argv) == 0
    report = json.loads((tmp_path / "burgers1d_convergence.json").read_text(encoding="utf-8"))
    assert [row["cells"] for row in report["rows"]] == [10, 20]
    assert report["rows"][0]["l1_order"] is None
    assert report["rows"][1]["l1_order"] > 0.0
    assert (tmp_path / "burgers1d_convergence.txt").read_text(encoding="utf-8") == capsys.readouterr().out


def test_ficheiro_de_configuracao(tmp_path):
    cfg = tmp_path / "lax.cfg"
    cfg.write_text(
        "# tubo de Lax curto\n"
        "problem = lax\ncells = 40\nfinal_time = 0.01\n"
        f"output_dir = {tmp_path / 'out'}\nprogress = false\n",
        encoding="utf-8",
    )
    assert cli_main(["run", "--config", str(cfg)]) == 0
    assert (tmp_path / "out" / "lax_solution.dat").is_file()


def test_chave_desconhecida_no_ficheiro(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("problem = lax\ncolour = blue\n", encoding="utf-8")
    assert cli_main(["run", "--config", str(cfg), "--output-dir", str(tmp_path)]) == 2
