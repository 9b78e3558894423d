"""Golden file style checks of the command line front end."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from tracegen.cli import main

MODEL = str(Path(__file__).resolve().parent.parent / "models" / "p4.json")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_golden(capsys):
    code, out, err = run_cli(capsys, "analyze", "--model", MODEL)
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data == {
        "letters": ["a", "b", "c", "d"],
        "clique_count": 8,
        "mobius_coefficients": [1, -4, 3],
        "p_sigma": 0.333333333333,
        "irreducible": True,
    }


def test_analyze_with_subsets(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--model", MODEL, "--subset", "b,c", "--subset", "b,c,d"
    )
    assert code == 0
    subsets = json.loads(out)["subsets"]
    assert subsets["b,c"]["mobius_coefficients"] == [1, -2]
    assert subsets["b,c"]["smallest_root"] == 0.5
    assert subsets["b,c,d"]["mobius_coefficients"] == [1, -3, 1]
    assert subsets["b,c,d"]["smallest_root"] == pytest.approx(0.381966011250)


def test_sample_golden_lines(capsys):
    code, out, err = run_cli(
        capsys, "sample", "--model", MODEL, "--p", "0.2", "--n", "3", "--seed", "7"
    )
    assert code == 0 and err == ""
    assert out.splitlines() == [
        "# seed=7 p=0.2 n=3",
        "(a c)",
        "1",
        "1",
    ]


def test_sample_json_format(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--model", MODEL, "--p", "0.2", "--n", "2",
        "--seed", "7", "--format", "json",
    )
    assert code == 0
    lines = out.splitlines()
    header = json.loads(lines[0])
    assert header == {"seed": 7, "p": 0.2, "n": 2}
    first = json.loads(lines[1])
    assert first == [["a", "c"]]
    assert json.loads(lines[2]) == []


def test_sample_is_deterministic(capsys):
    argv = ["sample", "--model", MODEL, "--p", "0.25", "--n", "20", "--seed", "3"]
    _, first, _ = run_cli(capsys, *argv)
    _, again, _ = run_cli(capsys, *argv)
    assert first == again


def test_sample_rejects_p_beyond_root(capsys):
    code, out, err = run_cli(
        capsys, "sample", "--model", MODEL, "--p", "0.5", "--n", "1"
    )
    assert code == 2 and out == ""
    assert "0.333333333333" in err


def test_unreadable_model_file(capsys):
    code, _, err = run_cli(capsys, "analyze", "--model", "/nonexistent/m.json")
    assert code == 2
    assert "error" in err.lower()


def test_invalid_model_content(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"letters": ["a"], "dependence": [["a", "z"]]}))
    code, _, err = run_cli(capsys, "analyze", "--model", str(bad))
    assert code == 2
    assert "z" in err


def test_unknown_flag_exits_with_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--model", MODEL, "--bogus"])
    assert exc.value.code == 2


def test_stream_golden_and_repeatable(capsys):
    argv = [
        "stream", "--model", MODEL, "--pivot-letter", "a",
        "--blocks", "3", "--seed", "7",
    ]
    code, first, err = run_cli(capsys, *argv)
    assert code == 0 and err == ""
    code, again, _ = run_cli(capsys, *argv)
    assert first == again
    lines = first.splitlines()
    assert json.loads(lines[0]) == {
        "seed": 7, "pivot": "a", "p_star": 1 / 3,
    }
    records = [json.loads(line) for line in lines[1:]]
    assert [r["k"] for r in records] == [1, 2, 3]
    assert records[0]["block"] == [["b", "d"], ["c"], ["b"], ["c"], ["b"], ["a"]]
    assert records[-1]["length"] == 12


def test_stream_emit_final_matches_each_block_product(capsys):
    base = ["stream", "--model", MODEL, "--pivot-letter", "a",
            "--blocks", "5", "--seed", "9"]
    _, each, _ = run_cli(capsys, *base)
    _, final, _ = run_cli(capsys, *base, "--emit", "final")
    last = json.loads(each.splitlines()[-1])
    only = json.loads(final.splitlines()[-1])
    assert only["k"] == 5
    assert only["length"] == last["length"]
    assert "final" in only and "block" not in only


def test_stream_min_length_stops(capsys):
    code, out, _ = run_cli(
        capsys, "stream", "--model", MODEL, "--pivot-letter", "a",
        "--blocks", "0", "--min-length", "10", "--seed", "7",
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()[1:]]
    assert records[-1]["length"] >= 10
    assert all(r["length"] < 10 for r in records[:-1])


def test_stream_workers_output_is_byte_identical(capsys):
    base = ["stream", "--model", MODEL, "--pivot-letter", "a",
            "--blocks", "6", "--seed", "7"]
    _, sequential, _ = run_cli(capsys, *base, "--emit", "final")
    _, parallel, _ = run_cli(capsys, *base, "--workers", "2")
    assert sequential == parallel


def test_stream_workers_need_blocks(capsys):
    code, out, err = run_cli(
        capsys, "stream", "--model", MODEL, "--workers", "2", "--blocks", "0"
    )
    assert code == 2 and out == ""
    assert "--blocks" in err


def test_stream_rejects_reducible_model(tmp_path, capsys):
    free = tmp_path / "pair.json"
    free.write_text(json.dumps({"letters": ["a", "b"], "dependence": []}))
    code, _, err = run_cli(
        capsys, "stream", "--model", str(free), "--blocks", "2"
    )
    assert code == 2
    assert "irreducible" in err


def test_verify_mobius_suite(capsys, tmp_path):
    report_file = tmp_path / "report.json"
    code, out, err = run_cli(
        capsys, "verify", "--model", MODEL, "--suite", "mobius",
        "--report", str(report_file),
    )
    assert code == 0 and out == ""
    payload = json.loads(report_file.read_text())
    assert payload and all(entry["passed"] for entry in payload)
    for line in err.strip().splitlines():
        assert line.startswith("pass ")


def test_module_invocation_works():
    proc = subprocess.run(
        [sys.executable, "-m", "tracegen.cli", "analyze", "--model", MODEL],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["p_sigma"] == 0.333333333333
