import json
import subprocess
import sys

import pytest

from hochcomp.cli import main, render_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_table(capsys):
    code, out, _ = run(capsys, "cohomology", "cyclic3.quiver", "--max-degree", "8")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:]]
    assert [int(r[3]) for r in rows] == [2] + [1] * 8
    assert rows[1][2] == "4"


def test_cohomology_json_schema(capsys):
    code, out, _ = run(capsys, "cohomology", "cyclic2.quiver", "--format", "json",
                       "--max-degree", "3", "--representatives")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert [e["dim"] for e in doc["cohomology"]] == [2, 1, 1, 1]
    assert doc["cohomology"][2]["representatives"][0]["values"] == [
        {"generator": "a1 a2 a1", "value": "a1"}]


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "cyclic3.quiver", "--max-degree", "5",
                       "--sample-budget", "200")
    assert code == 0
    assert "FAIL" not in out


def test_verify_failure_exit_one(capsys, monkeypatch):
    from hochcomp import cli
    from hochcomp.resolution import Report

    def broken(A, d):
        rep = Report("d_squared")
        rep.fail("forced")
        return rep

    monkeypatch.setattr(cli, "verify_complex", broken)
    code, out, _ = run(capsys, "verify", "linear4.quiver", "--max-degree", "2",
                       "--sample-budget", "10")
    assert code == 1
    assert "FAIL" in out and "forced" in out


def test_malformed_file_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertices: 2\narrow: a : 1 -> 2\nrelation: a q\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "line 3" in err and "unknown arrow label" in err


@pytest.mark.parametrize("argv", [
    ["basis", "missing.quiver"],
    ["basis", "cyclic3.quiver", "--field", "p:4"],
    ["cohomology", "cyclic3.quiver", "--max-degree", "-1"],
    ["bracket", "0", "1", "cyclic3.quiver"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_validate_echo_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "linear6.quiver", "--echo")
    assert code == 0
    canonical = "\n".join(out.splitlines()[1:]) + "\n"
    f = tmp_path / "copy.quiver"
    f.write_text(canonical)
    code, out2, _ = run(capsys, "validate", str(f), "--echo")
    assert out2.splitlines()[1:] == out.splitlines()[1:]


def test_basis_and_resolution(capsys):
    code, out, _ = run(capsys, "basis", "linear4.quiver", "--format", "json")
    assert [b["path"] for b in json.loads(out)["basis"]] == ["e1", "e2", "e3", "e4", "a", "b", "c"]
    code, out, _ = run(capsys, "resolution", "linear4.quiver", "--max-degree", "3")
    assert "-e1 (x) a b (x) c + a (x) b c (x) e4" in out


def test_bracket_table(capsys):
    code, out, _ = run(capsys, "bracket", "3", "5", "cyclic3.quiver")
    assert code == 0
    assert out.splitlines()[-1].split() == ["HH3.1", "HH5.1", "-2*HH7.1"]


def test_cochain_file(capsys, tmp_path):
    f = tmp_path / "pair.txt"
    f.write_text("AP:a1 a2 a3 a1@0:4 -> 1 * a1\n---\n"
                 "AP:a1 a2 a3 a1 a2 a3 a1@0:4,3:7 -> 1 * a1\n")
    code, out, _ = run(capsys, "bracket", "2", "3", "cyclic3.quiver", "--cochain-file", str(f))
    assert code == 0
    assert out.strip() == "AP:a1 a2 a3 a1 a2 a3 a1 a2 a3 a1@0:4,3:7,6:10 -> 1 * a1"
    code, _, err = run(capsys, "cup", "2", "2", "cyclic3.quiver", "--cochain-file", str(f))
    assert code == 2 and "do not match" in err


def test_field_option(capsys):
    code, out, _ = run(capsys, "cohomology", "cubic.quiver", "--field", "p:3",
                       "--max-degree", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["field"] == "p:3"
    assert [e["dim"] for e in doc["cohomology"]] == [3, 3, 3]


def test_render_table():
    assert render_table(["a", "bb"], [(1, 2)]) == "a  bb\n-  --\n1  2"


def test_json_byte_identical_across_processes(tmp_path):
    cmd = [sys.executable, "-m", "hochcomp.cli", "verify", "twocycle.quiver", "--format", "json",
           "--max-degree", "4", "--sample-budget", "50", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, cwd=tmp_path, env={"PYTHONHASHSEED": "1"})
    second = subprocess.run(cmd, capture_output=True, cwd=tmp_path,
                            env={"PYTHONHASHSEED": "2", "HOCHCOMP_THREADS": "4"})
    assert first.returncode == second.returncode == 0, first.stderr
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["seed"] == 7


def test_console_script():
    out = subprocess.run(["hochcomp", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("hochcomp ")


GOLDEN = [
    ("cyclic3_cohomology.json",
     ["cohomology", "cyclic3.quiver", "--max-degree", "6", "--representatives"]),
    ("linear4_resolution.json", ["resolution", "linear4.quiver", "--max-degree", "4"]),
    ("truncated2_3_bracket_1_3.json", ["bracket", "1", "3", "truncated2_3.quiver"]),
]


@pytest.mark.parametrize("name, argv", GOLDEN)
def test_golden(capsys, name, argv):
    from pathlib import Path

    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert out == (Path(__file__).parent / "golden" / name).read_text()
