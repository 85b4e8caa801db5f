# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Tests for the command line interface."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from deepdiff import DeepDiff

from crystalline.invariants import CheckResult, surface_from_hypersurface
from crystalline.invariants import _cli

# Set up some constants for reusability
QUINTIC_OPTIONS = [
    "surface",
    "--p=7",
    "--c1sq=5",
    "--c2=55",
    "--b1=0",
    "--b2=53",
    "--q=0",
    "--h01=0",
    "--pg=4",
    "--h11=45",
    "--chi=5",
    "--kodaira=2",
    "--minimal",
    "--mazur-ogus",
    "--pic-reduced",
    "--h2cris-torsion-free",
]
SZPIRO_OPTIONS = ["--g=2", "--q=2", "--d=6", "--p=5", "--b1=4"]


@pytest.fixture
def runner() -> CliRunner:
    """Create a runner for the command line interface."""
    return CliRunner()


def test_szpiro_json(runner: CliRunner) -> None:
    """Test the members of a Frobenius pullback family as JSON."""
    result = runner.invoke(
        _cli.cli, ["szpiro", *SZPIRO_OPTIONS, "--n-max=3", "--format=json"]
    )
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert [row["hW11"] for row in rows] == [1, -19, -119]
    assert [row["c1sq_le_5c2_plus_6b1"] for row in rows] == [True, False, False]


def test_szpiro_csv(runner: CliRunner) -> None:
    """Test the CSV rendering of a family."""
    result = runner.invoke(
        _cli.cli, ["szpiro", *SZPIRO_OPTIONS, "--n-max=1", "--format=csv"]
    )
    assert result.exit_code == 0, result.output
    header, row = result.stdout.splitlines()
    assert header.split(",")[:9] == [
        "g",
        "q",
        "d",
        "p",
        "b1",
        "n",
        "c1sq",
        "c2",
        "hW11",
    ]
    assert row.split(",")[:9] == ["2", "2", "6", "5", "4", "1", "38", "4", "1"]
    assert row.endswith("false,true,true,true")


def test_szpiro_errors(runner: CliRunner) -> None:
    """Test non-integral families and invalid parameters."""
    result = runner.invoke(
        _cli.cli, ["szpiro", "--g=2", "--q=2", "--d=1", "--p=5", "--b1=4", "--n-max=1"]
    )
    assert result.exit_code == 1
    assert "divisible by 6" in result.stderr
    result = runner.invoke(
        _cli.cli, ["szpiro", "--g=2", "--q=2", "--d=6", "--p=4", "--b1=4", "--n-max=1"]
    )
    assert result.exit_code == 2


def test_hypersurface_json(runner: CliRunner) -> None:
    """Test the invariants of the quintic threefold."""
    result = runner.invoke(
        _cli.cli, ["hypersurface", "--dim=3", "--degree=5", "--format=json"]
    )
    assert result.exit_code == 0, result.output
    assert not DeepDiff(
        json.loads(result.stdout),
        {
            "dim": 3,
            "degree": 5,
            "hodge": [[1, 0, 0, 1], [0, 1, 101, 0], [0, 101, 1, 0], [1, 0, 0, 1]],
            "b3": 204,
            "T": [[0, 0, 0, 1], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
            "T_exact": False,
        },
    )


def test_hypersurface_table(runner: CliRunner) -> None:
    """Test the key-value table of a fourfold."""
    result = runner.invoke(
        _cli.cli, ["hypersurface", "--dim=4", "--degree=6", "--slope-condition"]
    )
    assert result.exit_code == 0, result.output
    lines = {
        key: value
        for key, value in (line.split() for line in result.stdout.splitlines())
    }
    assert lines["hodge.2.2"] == "1752"
    assert lines["b4"] == "2606"
    assert lines["T.1.3"] == "428"
    assert lines["T_exact"] == "true"


def test_hypersurface_bad_order(runner: CliRunner) -> None:
    """Test that the series order must reach the dimension."""
    result = runner.invoke(
        _cli.cli, ["hypersurface", "--dim=3", "--degree=5", "--order=2"]
    )
    assert result.exit_code == 2
    result = runner.invoke(_cli.cli, ["hypersurface", "--dim=5", "--degree=5"])
    assert result.exit_code == 2


def test_surface_inline(runner: CliRunner) -> None:
    """Test the report of the quintic surface given inline."""
    result = runner.invoke(_cli.cli, [*QUINTIC_OPTIONS, "--format=json"])
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["violations"] == []
    assert record["report"]["hW11"] == 45
    assert record["report"]["predicates"]["c1sq_le_5c2"] is True
    assert record["raynaud"]["checks"]["hw11_le_h11"] is True
    assert "supersingular_dichotomy" not in record


def test_surface_supersingular(runner: CliRunner) -> None:
    """Test the optional checks that need slopes."""
    result = runner.invoke(
        _cli.cli,
        [*QUINTIC_OPTIONS, "--supersingular", "--h2-slopes=1:53", "--format=json"],
    )
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert (record["report"]["m11"], record["report"]["T02"]) == (53, 4)
    assert record["supersingular_dichotomy"] == "c1^2 <= 5c2"
    assert record["supersingular_identity"] is True
    assert record["sufficient_5c2"]["mazur_ogus_m11_ge_4pg"] is True


def test_surface_input_file(runner: CliRunner, tmp_path: Path) -> None:
    """Test reading a record from a JSON file and blowing it up."""
    source = tmp_path / "quintic.json"
    source.write_text(json.dumps(surface_from_hypersurface(5, p=7).to_dict()))
    result = runner.invoke(
        _cli.cli, ["surface", f"--input={source}", "--blowup=1", "--format=json"]
    )
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["input"]["c1sq"] == 4
    assert record["report"]["hW11"] == 46


def test_surface_violations(runner: CliRunner) -> None:
    """Test that an inconsistent record exits with status 1."""
    options = [
        option if option != "--c2=55" else "--c2=56" for option in QUINTIC_OPTIONS
    ]
    result = runner.invoke(_cli.cli, [*options, "--format=json"])
    assert result.exit_code == 1
    record = json.loads(result.stdout)
    assert "Noether fails: 12*chi = 60 != c1^2 + c2 = 61" in record["violations"]
    assert "report" not in record


def test_surface_usage_errors(runner: CliRunner, tmp_path: Path) -> None:
    """Test missing options, bad slopes and bad input files."""
    result = runner.invoke(_cli.cli, ["surface", "--p=7"])
    assert result.exit_code == 2
    assert "--c1sq" in result.stderr
    result = runner.invoke(_cli.cli, [*QUINTIC_OPTIONS, "--h2-slopes=1-53"])
    assert result.exit_code == 2
    source = tmp_path / "broken.json"
    source.write_text("[1, 2]")
    result = runner.invoke(_cli.cli, ["surface", f"--input={source}"])
    assert result.exit_code == 2


def test_threefold_hirokado(runner: CliRunner) -> None:
    """Test the report of a non-liftable Calabi-Yau threefold."""
    result = runner.invoke(
        _cli.cli,
        ["threefold", "--c3=48", "--b2=23", "--b3=0", "--calabi-yau", "--format=json"],
    )
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)["report"]
    assert report["table"]["hW"][1][2] == -1
    assert report["characterization"]["conditions"]["b3_zero"] == "holds"
    assert report["liftability"] == "non-liftable"


def test_threefold_quintic_csv(runner: CliRunner) -> None:
    """Test the CSV rendering of the quintic threefold."""
    result = runner.invoke(
        _cli.cli,
        [
            "threefold",
            "--b2=1",
            "--b3=204",
            "--calabi-yau",
            "--h0-omega1-zero",
            "--format=csv",
        ],
    )
    assert result.exit_code == 0, result.output
    header, row = result.stdout.splitlines()
    values = dict(zip(header.split(","), row.split(",")))
    assert values["report.chi_omega1"] == "100"
    assert values["report.table.hW.1.2"] == "101"
    assert values["report.liftability"] == "conjecturally liftable"


def test_threefold_errors(runner: CliRunner) -> None:
    """Test invalid threefold records."""
    result = runner.invoke(_cli.cli, ["threefold", "--c1c2=24", "--b2=1"])
    assert result.exit_code == 1
    assert "c3 is required" in result.stdout
    result = runner.invoke(_cli.cli, ["threefold", "--c3=48"])
    assert result.exit_code == 2
    result = runner.invoke(
        _cli.cli, ["threefold", "--c3=52", "--b2=23", "--calabi-yau"]
    )
    assert result.exit_code == 1
    assert "impossible" in result.stderr


def test_threefold_failure_is_logged(
    runner: CliRunner, caplog: pytest.LogCaptureFixture
) -> None:
    """Test that a failing command logs the error."""
    result = runner.invoke(
        _cli.cli, ["threefold", "--c3=52", "--b2=23", "--calabi-yau"]
    )
    assert result.exit_code == 1
    errors = [record for record in caplog.records if record.levelname == "ERROR"]
    assert len(errors) == 1
    assert "impossible" in errors[0].getMessage()


def test_threefold_h0_omega1_unknown_by_default(runner: CliRunner) -> None:
    """Test that omitting --h0-omega1-zero leaves the condition unknown."""
    options = ["threefold", "--b2=1", "--b3=204", "--calabi-yau", "--format=csv"]
    result = runner.invoke(_cli.cli, options)
    assert result.exit_code == 0, result.output
    header, row = result.stdout.splitlines()
    values = dict(zip(header.split(","), row.split(",")))
    assert values["input.h0_omega1_zero"] == ""
    assert values["report.liftability"] == ""

    result = runner.invoke(_cli.cli, [*options, "--no-h0-omega1-zero"])
    assert result.exit_code == 0, result.output
    header, row = result.stdout.splitlines()
    values = dict(zip(header.split(","), row.split(",")))
    assert values["input.h0_omega1_zero"] == "false"
    assert values["report.liftability"] == ""


def test_scan_hypersurface(runner: CliRunner) -> None:
    """Test a hypersurface scan with fixed columns."""
    result = runner.invoke(
        _cli.cli, ["scan", "hypersurface", "--dim=2..4", "--degree=5,6", "--jobs=3"]
    )
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "dim,degree,h0n,h1n_1,h22,b_n,T0n,T13,T_exact"
    assert lines[1] == "2,5,4,45,,53,4,,false"
    assert lines[6] == "4,6,1,426,1752,2606,1,428,false"
    assert len(lines) == 7


def test_scan_hypersurface_skips_bad_points(runner: CliRunner) -> None:
    """Test that failing grid points are skipped and reported."""
    result = runner.invoke(
        _cli.cli, ["scan", "hypersurface", "--dim=2", "--degree=0,4"]
    )
    assert result.exit_code == 1
    assert result.stdout.splitlines()[1:] == ["2,4,1,20,,22,1,,false"]
    result = runner.invoke(
        _cli.cli, ["scan", "hypersurface", "--dim=1..2", "--degree=4"]
    )
    assert result.exit_code == 2
    result = runner.invoke(_cli.cli, ["scan", "hypersurface", "--dim=x", "--degree=4"])
    assert result.exit_code == 2


def test_scan_szpiro(runner: CliRunner) -> None:
    """Test a scan over Frobenius pullback families."""
    result = runner.invoke(
        _cli.cli,
        [
            "scan",
            "szpiro",
            *SZPIRO_OPTIONS[:2],
            "--d=1,6",
            "--p=5",
            "--b1=4",
            "--n=1..3",
            "--format=json",
        ],
    )
    assert result.exit_code == 1
    rows = json.loads(result.stdout)
    assert [(row["d"], row["hW11"]) for row in rows] == [(6, 1), (6, -19), (6, -119)]


def test_selftest_failure_exit_code(
    runner: CliRunner, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Test that a failing acceptance check gives exit status 1."""
    monkeypatch.setattr(
        _cli,
        "run_selftest",
        lambda seed: [CheckResult("ok", True), CheckResult("broken", False, "boom")],
    )
    result = runner.invoke(_cli.cli, ["selftest", "--format=csv"])
    assert result.exit_code == 1
    assert result.stdout.splitlines() == [
        "check,passed,detail",
        "ok,true,",
        "broken,false,boom",
    ]
