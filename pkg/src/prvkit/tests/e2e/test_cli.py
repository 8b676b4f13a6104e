"""Exit codes, replay lines and config handling of the installed command."""
from __future__ import annotations

from prvkit.tests.e2e.helpers import run_json


def test_prv_replay_reproduces_result(workdir):
    """A record's replay argv, rerun with --json, prints the same record."""
    doc = run_json(workdir, "prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2")
    assert doc["nu"] == [1, 1]
    assert doc["dim"] == 2
    again = run_json(workdir, *doc["replay"])
    assert again == doc


def test_sl2_example_exit_zero(workdir):
    result = workdir.run_prvkit("--json", "orbit-dim", "--sl2-example", check=True)
    doc = result.json_lines()[-1]
    assert doc["orbit_dim"] == 3
    assert doc["valuations"] == [2, 1, 0]


def test_long_flag_alias(workdir):
    """The long and short spellings of the SL_2 reproduction give the same record."""
    result = workdir.run_prvkit("--json", "orbit-dim", "--paper-sl2-example")
    assert result.returncode == 0
    doc = result.json_lines()[-1]
    assert doc["orbit_dim"] == 3
    assert doc["holds"] is True


def test_failed_implication_exits_one(workdir):
    """The long root of B2 loses the invariant of (α∨, α∨, α∨)."""
    result = workdir.run_prvkit(
        "transfer", "--preset", "sl2-root:B2:1", "--basis", "lattice", "--coweight=1", "--coweight=1", "--coweight=1"
    )
    assert result.returncode == 1
    assert "have none" in result.stderr


def test_unknown_type_exits_two(workdir):
    result = workdir.run_prvkit("prv", "--type", "Z9", "--lambda", "1", "--mu", "1")
    assert result.returncode == 2
    assert "Z9" in result.stderr


def test_missing_subcommand_exits_two(workdir):
    assert workdir.run_prvkit().returncode == 2


def test_plain_output_is_a_tree(workdir):
    result = workdir.run_prvkit("invariants", "--type", "A1", "--weight", "2", "--weight", "2", "--weight", "2",
                                check=True)
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "Invariants over A1"
    assert lines[-1].endswith("dim: 1")


def test_compact_config(compact_workdir):
    """[UI] compact in the working directory gives one-line reports."""
    result = compact_workdir.run_prvkit("prv", "--type", "A2", "--lambda", "1,1", "--mu", "1,1", "--w", "s1s2",
                                        check=True)
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("PRV  ")
    assert "nu=(1, 1)" in lines[0]
    assert "holds=yes" in lines[0]


def test_sweep_prints_json_lines(workdir):
    result = workdir.run_prvkit("--json", "sweep", "--suite", "oracle", "--types", "A1", "--bound", "1", check=True)
    lines = result.json_lines()
    assert len(lines) == 5
    assert all(rec["holds"] for rec in lines[:-1])
    assert lines[-1]["summary"] is True
    assert lines[-1]["instances"] == 4
