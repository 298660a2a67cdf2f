import json
import logging

import pytest

from prolongation_kit.cli.commands import run_command
from prolongation_kit.prolong.extraction import extract, reported_in_algebra
from prolongation_kit.prolong.solutions import general_solution
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, InitKind, Status
from prolongation_kit.settings.workbench_settings import WorkbenchSettings
from prolongation_kit.sim.convergence import ConvergenceReport, fit_order


@pytest.fixture
def out(tmp_path):
    return tmp_path / "report.txt"


def test_close_sl2_passes(out):
    code, report = run_command(["close-sl2", "--out", str(out)])

    assert code == EXIT_OK
    assert report.command == "close-sl2"
    assert out.read_text(encoding="utf-8").startswith("# prolongation-kit ")
    assert all(s.status != Status.FAIL for s in report.sections)


def test_close_sl2_json_output(out):
    code, _ = run_command(["close-sl2", "--reduction", "ii", "--format", "json", "--out", str(out)])

    payload = json.loads(out.read_text(encoding="utf-8"))
    assert code == EXIT_OK
    assert payload["command"] == "close-sl2"
    assert payload["config"]["reduction"] == "ii"


def test_invalid_gamma2_is_a_usage_error():
    code, report = run_command(["close-sl2", "--gamma2", "2"])

    assert code == EXIT_USAGE
    assert report is None


def test_unknown_command_is_a_usage_error():
    code, report = run_command(["no-such-command"])

    assert code == EXIT_USAGE
    assert report is None


def test_explicit_settings_are_echoed(out):
    settings = WorkbenchSettings(reduction="iii", seed=7)

    code, report = run_command(["close-sl2", "--out", str(out)], settings=settings)

    assert code == EXIT_OK
    assert report.config["reduction"] == "iii"
    assert report.config["seed"] == "7"


def test_config_file_values_apply(tmp_path, out):
    config = tmp_path / "workbench.toml"
    config.write_text("[model]\ngamma2 = -1\n\n[run]\nseed = 3\n", encoding="utf-8")

    code, report = run_command(["close-sl2", "--config", str(config), "--out", str(out)])

    assert code == EXIT_OK
    assert report.config["gamma2"] == "-1"
    assert report.config["seed"] == "3"


def test_eds_verify_passes(out):
    code, report = run_command(["eds-verify", "--gamma2", "-1", "--out", str(out)])

    assert code == EXIT_OK
    assert report.sections[0].name == "generators"


def test_algebra_close_reads_dsl_input(tmp_path, out):
    source = tmp_path / "so3.alg"
    source.write_text("[X1,X2] = X3\n[X2,X3] = X1\n[X3,X1] = X2\n", encoding="utf-8")

    code, report = run_command(["algebra-close", "--input", str(source), "--depth", "1", "--out", str(out)])

    assert code == EXIT_OK
    summary = report.sections[0]
    assert {e.key: e.value for e in summary.entries}["fixpoint"] == "True"


def test_algebra_close_rejects_bad_syntax(tmp_path):
    source = tmp_path / "bad.alg"
    source.write_text("[X1 X2] = X3\n", encoding="utf-8")

    code, report = run_command(["algebra-close", "--input", str(source)])

    assert code == EXIT_USAGE
    assert report is None


def test_simulate_writes_snapshot(tmp_path, out):
    snapshot = tmp_path / "field.csv"

    code, report = run_command(
        [
            "simulate",
            "--init",
            "constant",
            "--grid",
            "8",
            "--final-time",
            "0.01",
            "--snapshot",
            str(snapshot),
            "--out",
            str(out),
        ]
    )

    assert code == EXIT_OK
    assert snapshot.read_text().splitlines()[0] == "i,j,S1,S2,S3"
    assert report.command == "simulate"


@pytest.fixture
def root_level():
    root = logging.getLogger()
    previous = root.level
    yield root
    root.setLevel(previous)


def test_config_file_log_level_configures_logging(tmp_path, out, root_level):
    config = tmp_path / "workbench.toml"
    config.write_text('[logging]\nlog_level = "debug"\n', encoding="utf-8")

    code, report = run_command(["close-sl2", "--config", str(config), "--out", str(out)])

    assert code == EXIT_OK
    assert report.config["log_level"] == "DEBUG"
    assert root_level.level == logging.DEBUG


def test_log_level_flag_overrides_config(tmp_path, out, root_level):
    config = tmp_path / "workbench.toml"
    config.write_text('log_level = "debug"\n', encoding="utf-8")

    code, report = run_command(["--log-level", "error", "close-sl2", "--config", str(config), "--out", str(out)])

    assert code == EXIT_OK
    assert report.config["log_level"] == "ERROR"
    assert root_level.level == logging.ERROR


def test_unknown_log_level_is_a_usage_error(out, root_level):
    code, _ = run_command(["--log-level", "chatty", "close-sl2", "--out", str(out)])
    assert code == EXIT_USAGE


def test_convergence_fails_outside_order_window(monkeypatch, out, caplog):
    def first_order_study(kind, grids, *args, **kwargs):
        study = ConvergenceReport(InitKind(kind), list(grids), [1.0, 0.5, 0.25])
        study.monitors["solution"] = fit_order(study.spacings, [0.4, 0.2, 0.1])
        return study

    monkeypatch.setattr("prolongation_kit.cli.commands.convergence_study", first_order_study)
    caplog.set_level(logging.WARNING)

    code, report = run_command(["convergence", "--grids", "32,64,128", "--out", str(out)])

    assert code == EXIT_VERIFICATION
    section = next(s for s in report.sections if s.name == "solution")
    assert section.status == Status.FAIL
    order = next(e for e in section.entries if e.key == "order")
    assert order.value == "1.000"
    assert order.status == Status.FAIL
    assert "Verificación fallida: convergence: solution" in caplog.text
    assert out.exists()


def test_derive_rewrites_reported_relations(out):
    code, report = run_command(["derive", "--out", str(out)])

    assert code == EXIT_OK
    section = next(s for s in report.sections if s.name == "reported relations")
    in_table = [e for e in section.entries if e.key == "in table"]
    assert len(in_table) == len(reported_in_algebra(extract(general_solution(ModelParams(1)))))
