# -*- coding: utf-8 -*-

import asyncio
import csv
import io
import json

import numpy as np
import pytest

from trajstat.actions import ActionRegistry, ActionResult
from trajstat.application import Application, ReportWriter, RunConfig
from trajstat.application import attach_negative_values, flatten_row, format_cell
from trajstat.application import resolve_model_path, to_builtin
from trajstat.errors import EXIT_IO, EXIT_NUMERICAL, EXIT_OK, EXIT_VALIDATION
from trajstat.model import load_model, model_hash
from trajstat.utils import ConfigManager


@pytest.fixture
def app():
    return Application()


def _read_csv(path):
    lines = path.read_text().splitlines()
    header = json.loads(lines[0][2:])
    rows = list(csv.DictReader(lines[1:]))

    return header, rows


def test_negative_values_are_attached():
    argv = ["potentials", "m", "--s-grid", "-0.5:0.5:3", "--phi", "-1", "--c", "2"]

    assert attach_negative_values(argv) == [
        "potentials",
        "m",
        "--s-grid=-0.5:0.5:3",
        "--phi=-1",
        "--c",
        "2",
    ]
    assert attach_negative_values(["--s=-1", "-v"]) == ["--s=-1", "-v"]


def test_validate_writes_to_standard_output(app, capsys):
    assert app.run(["validate", "two_level_decay"]) == EXIT_OK

    document = json.loads(capsys.readouterr().out)
    model = load_model(resolve_model_path("two_level_decay"))

    assert document["payload"]["name"] == "two_level_decay"
    assert document["payload"]["valid"] is True
    assert document["payload"]["renewal"] is False
    assert document["header"]["model_hash"] == model_hash(model)
    assert document["header"]["config"]["command"] == "validate"


def test_potentials_write_companion_files(app, tmp_path):
    out = tmp_path / "pot.csv"
    argv = ["potentials", "driven_qubit", "--s-grid", "-0.2:0.2:5", "--out", str(out)]

    assert app.run(argv) == EXIT_OK

    header, rows = _read_csv(out)

    assert header["config"]["options"]["s_grid"] == pytest.approx(
        [-0.2, -0.1, 0.0, 0.1, 0.2]
    )
    assert len(rows) == 5
    assert float(rows[2]["log_partition_rate"]) == pytest.approx(0.0, abs=1e-10)
    assert (tmp_path / "pot_rate_function.json").is_file()


def test_counting_writes_every_table(app, tmp_path):
    argv = [
        "counting", "two_level_decay", "--tau", "1,2", "--K-max", "4",
        "--jump-K", "1", "--T-grid", "0:2:5", "--laplace-x", "0.5",
        "--out", str(tmp_path / "counts"),
    ]

    assert app.run(argv) == EXIT_OK

    names = {path.name for path in (tmp_path / "counts").iterdir()}
    assert names == {
        "counting.csv",
        "generating_checks.csv",
        "jump_density.csv",
        "laplace.json",
    }

    _, rows = _read_csv(tmp_path / "counts" / "jump_density.csv")
    np.testing.assert_allclose(
        [float(row["p_K"]) for row in rows],
        np.exp(-np.linspace(0.0, 2.0, 5)),
        atol=1e-12,
    )


def test_sample_into_a_directory(app, tmp_path):
    out = tmp_path / "run"
    argv = [
        "sample", "two_level_decay", "--tau", "2", "--n", "20",
        "--seed", "3", "--out", str(out),
    ]

    assert app.run(argv) == EXIT_OK

    lines = (out / "trajectories.jsonl").read_text().splitlines()
    summary = json.loads((out / "summary.json").read_text())

    assert "header" in json.loads(lines[0])
    assert len(lines) == 21
    assert all(json.loads(line)["K"] in (0, 1) for line in lines[1:])
    assert summary["payload"]["n_samples"] == 20
    assert summary["payload"]["seed"] == 3


def test_renewal_demo_artifacts(app, tmp_path):
    out = tmp_path / "demo"

    assert app.run(["renewal-demo", "--out", str(out)]) == EXIT_OK
    assert (out / "analytic.csv").is_file()
    assert (out / "product.json").is_file()
    assert (out / "parameters.json").is_file()


def test_exit_status_of_failures(app, tmp_path):
    assert app.run(["validate", str(tmp_path / "missing.json")]) == EXIT_IO
    assert app.run(["potentials", "driven_qubit"]) == EXIT_VALIDATION
    assert app.run(["no-such-command"]) == EXIT_VALIDATION
    assert app.run(["concentration", "two_level_decay"]) == EXIT_NUMERICAL


def test_unknown_tolerance_is_a_validation_error(app):
    argv = ["validate", "driven_qubit", "--tol", "no_such=1"]

    assert app.run(argv) == EXIT_VALIDATION
    assert "no_such" not in ConfigManager().get_tolerances()


def test_tolerance_overrides_reach_the_header(app, capsys):
    argv = ["validate", "driven_qubit", "--tol", "tail_mass=1e-4"]

    assert app.run(argv) == EXIT_OK

    header = json.loads(capsys.readouterr().out)["header"]
    assert header["config"]["tolerances"]["tail_mass"] == pytest.approx(1e-4)
    assert ConfigManager().get_tolerance("tail_mass") == pytest.approx(1e-8)


def test_unknown_action():
    with pytest.raises(KeyError):
        asyncio.run(ActionRegistry().invoke("no-such-command", RunConfig("x")))


def test_run_config():
    config = RunConfig("sample", options={"tau": None, "n": 5})

    assert config.option("tau", 2.0) == 2.0
    assert config.option("n") == 5

    with pytest.raises(FileNotFoundError):
        config.load_model()

    with pytest.raises(FileNotFoundError):
        resolve_model_path("no_such_model")


def test_cells_and_rows():
    assert format_cell(0.1) == "0.10000000000000001"
    assert format_cell(np.float64(2.0)) == "2"
    assert format_cell(True) == "true"
    assert format_cell(None) == ""

    assert flatten_row({"a": 1, "M": [0.5, 1.5], "d": {"x": 2}}) == {
        "a": 1,
        "M_0": 0.5,
        "M_1": 1.5,
        "d_x": 2,
    }
    assert to_builtin({"z": 1 + 0j, "v": np.arange(2)}) == {"z": 1.0, "v": [0, 1]}


def test_csv_carries_the_header():
    writer = ReportWriter({"version": "1"})
    stream = io.StringIO()

    writer.write_csv(stream, [{"s": 0.5, "ok": True}, {"s": 1.0, "extra": 3}])

    assert stream.getvalue().splitlines() == [
        '# {"version": "1"}',
        "s,ok,extra",
        "0.5,true,",
        "1,,3",
    ]


def test_primary_artifact_format_follows_the_suffix(tmp_path):
    result = ActionResult().table("rows", [{"a": 1}]).report("info", {"b": 2})
    written = ReportWriter({}).write(result, str(tmp_path / "out.json"))

    assert [path.name for path in written] == ["out.json", "out_info.json"]
    assert json.loads((tmp_path / "out.json").read_text())["payload"] == [{"a": 1}]


DOCUMENTED_COMMANDS = [
    ("validate models/three_level_renewal.json", None),
    (
        "potentials models/three_level_renewal.json --kind x --grid 0.1:1.0:10"
        " --out potentials.csv",
        "potentials.csv",
    ),
    (
        "duality models/three_level_renewal.json --s-grid -0.5:0.5:21"
        " --out duality.csv",
        "duality.csv",
    ),
    (
        "counting models/three_level_renewal.json --tau 5 --kmax auto"
        " --out counts.csv",
        "counts.csv",
    ),
    (
        "concentration models/three_level_renewal.json --s 0.3 --K 4,8,16,32"
        " --out concentration.json",
        "concentration.json",
    ),
    (
        "sample models/three_level_renewal.json --scheme fixed-count --K 3"
        " --n 2 --seed 1 --out count.jsonl",
        "count.jsonl",
    ),
    (
        "sample models/three_level_renewal.json --scheme fixed-time --tau 2"
        " --n 2 --seed 1 --out time.jsonl",
        "time.jsonl",
    ),
    (
        "reduced models/three_level_renewal.json --s 0.3 --tau0 1 --tau 3,6"
        " --nmax 2 --out reduced.json",
        "reduced.json",
    ),
    (
        "phase-check models/three_level_renewal.json --kind P1 --phi 0.5"
        " --out phase.json",
        "phase.json",
    ),
    ("renewal-demo --out demo", "demo/analytic.csv"),
    (
        "equivalence-report models/three_level_renewal.json --s 0.3 --tau0 1"
        " --out report.json",
        "report.json",
    ),
]


@pytest.mark.parametrize("command, artifact", DOCUMENTED_COMMANDS)
def test_documented_commands(app, tmp_path, monkeypatch, command, artifact):
    monkeypatch.chdir(tmp_path)

    assert app.run(command.split()) == EXIT_OK

    if artifact is not None:
        assert (tmp_path / artifact).is_file()


def test_potentials_by_kind_and_grid(app, tmp_path):
    out = tmp_path / "potentials.csv"
    argv = [
        "potentials", "three_level_renewal", "--kind", "x",
        "--grid", "0.1:1.0:10", "--out", str(out),
    ]

    assert app.run(argv) == EXIT_OK

    _, rows = _read_csv(out)
    rates = [float(row["log_partition_rate"]) for row in rows]

    assert len(rows) == 10
    assert {"field", "log_partition_rate", "gap"} <= set(rows[0])
    assert all(row["kind"] == "x_ensemble" for row in rows)
    assert np.all(np.diff(rates) < 0)


def test_duality_table_round_trips(app, tmp_path):
    out = tmp_path / "duality.csv"
    argv = [
        "duality", "three_level_renewal", "--s-grid", "-0.5:0.5:21",
        "--out", str(out),
    ]

    assert app.run(argv) == EXIT_OK

    _, rows = _read_csv(out)

    assert len(rows) == 21
    assert all(float(row["round_trip_error"]) < 1e-8 for row in rows)


def test_automatic_count_truncation(app, tmp_path):
    out = tmp_path / "counts.csv"
    argv = ["counting", "three_level_renewal", "--tau", "5", "--kmax", "auto"]

    assert app.run(argv + ["--out", str(out)]) == EXIT_OK

    header, rows = _read_csv(out)
    total = sum(float(row["P_tau_K"]) for row in rows)

    assert header["config"]["options"]["K_max"] is None
    assert {"K", "P_tau_K"} <= set(rows[0])
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("scheme", ["fixed-count", "fixed_count"])
def test_scheme_spellings(app, tmp_path, scheme):
    out = tmp_path / "count.jsonl"
    argv = [
        "sample", "three_level_renewal", "--scheme", scheme, "--K", "3",
        "--n", "2", "--seed", "1", "--out", str(out),
    ]

    assert app.run(argv) == EXIT_OK

    lines = out.read_text().splitlines()
    assert [json.loads(line)["K"] for line in lines[1:]] == [3, 3]
