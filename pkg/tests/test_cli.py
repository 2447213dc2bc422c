"""Command-line interface: formats, exit codes, determinism, verify suites."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cubicmaps import golden
from cubicmaps.cli import main


def _run(capsys, *argv: str):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_orientable_unsensed(capsys) -> None:
    code, out, err = _run(capsys, "count", "--surface", "orientable", "--genus", "2", "--kind", "unsensed")
    assert (code, out, err) == (0, "8\n", "")


def test_count_nonorientable_rooted(capsys) -> None:
    code, out, _ = _run(capsys, "count", "--surface", "nonorientable", "--genus", "4", "--kind", "rooted")
    assert (code, out) == (0, "3780\n")


def test_count_large_genus_is_exact(capsys) -> None:
    code, out, _ = _run(capsys, "count", "--surface", "orientable", "--genus", "10", "--kind", "unsensed")
    assert (code, out) == (0, "5189463083084174721816125584\n")


def test_count_rejects_nonorientable_sensed(capsys) -> None:
    code, out, err = _run(capsys, "count", "--surface", "nonorientable", "--genus", "3", "--kind", "sensed")
    assert code == 2
    assert out == ""
    assert err.count("\n") == 1
    assert "sensed" in err


def test_count_rejects_out_of_domain_genus(capsys) -> None:
    assert _run(capsys, "count", "--surface", "orientable", "--genus", "0", "--kind", "rooted")[0] == 2
    assert _run(capsys, "count", "--surface", "nonorientable", "--genus", "1", "--kind", "rooted")[0] == 2


def test_usage_errors_exit_two(capsys) -> None:
    assert _run(capsys, "nonsense")[0] == 2
    assert _run(capsys, "count", "--surface", "orientable", "--genus", "2")[0] == 2
    assert _run(capsys, "count", "--surface", "klein", "--genus", "2", "--kind", "rooted")[0] == 2


def test_table_markdown_default(capsys) -> None:
    code, out, _ = _run(capsys, "table", "--surface", "orientable", "--gmin", "1", "--gmax", "2")
    assert code == 0
    assert out == (
        "| g | rooted | sensed | unsensed |\n"
        "| --- | --- | --- | --- |\n"
        "| 1 | 1 | 1 | 1 |\n"
        "| 2 | 105 | 9 | 8 |\n"
    )


def test_table_csv_single_row(capsys) -> None:
    code, out, _ = _run(capsys, "table", "--surface", "orientable", "--gmin", "1", "--gmax", "1", "--format", "csv")
    assert code == 0
    assert out == "g,rooted,sensed,unsensed\n1,1,1,1\n"


def test_table_csv_nonorientable_schema(capsys) -> None:
    code, out, _ = _run(capsys, "table", "--surface", "nonorientable", "--gmin", "2", "--gmax", "3", "--format", "csv")
    assert code == 0
    assert out == "g,rooted,unsensed\n2,6,2\n3,128,11\n"


def test_table_json_numbers_are_strings(capsys) -> None:
    code, out, _ = _run(capsys, "table", "--surface", "orientable", "--gmin", "9", "--gmax", "10", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [row["g"] for row in rows] == ["9", "10"]
    assert rows[1]["unsensed"] == "5189463083084174721816125584"
    for row in rows:
        assert all(isinstance(value, str) for value in row.values())


def test_table_range_validation(capsys) -> None:
    assert _run(capsys, "table", "--surface", "orientable", "--gmin", "0", "--gmax", "3")[0] == 2
    assert _run(capsys, "table", "--surface", "orientable", "--gmin", "5", "--gmax", "3")[0] == 2
    assert _run(capsys, "table", "--surface", "orientable", "--gmin", "1", "--gmax", "10001")[0] == 2
    assert _run(capsys, "table", "--surface", "nonorientable", "--gmin", "1", "--gmax", "3")[0] == 2


def test_table_output_is_deterministic(capsys) -> None:
    first = _run(capsys, "table", "--surface", "nonorientable", "--gmin", "2", "--gmax", "12")
    second = _run(capsys, "table", "--surface", "nonorientable", "--gmin", "2", "--gmax", "12")
    assert first == second


def test_orbifolds_markdown_single_row(capsys) -> None:
    code, out, _ = _run(capsys, "orbifolds", "--genus", "2")
    assert code == 0
    assert out == (
        "| g | l | genus | ns | nv | epsilon |\n"
        "| --- | --- | --- | --- | --- | --- |\n"
        "| 2 | 2 | 1 | 1 | 0 | 2 |\n"
    )


def test_orbifolds_markdown_marks_zero_rows(capsys) -> None:
    code, out, _ = _run(capsys, "orbifolds", "--genus", "5")
    assert code == 0
    lines = out.splitlines()
    assert "| 5 | 3 | 1 | 0 | 2 | 8 |" in lines
    assert "| 5 | 2 | 1 | 4 | 0 | 0 * |" in lines
    assert lines[-1].startswith("* epsilon = 0")


def test_orbifolds_csv_schema(capsys) -> None:
    code, out, _ = _run(capsys, "orbifolds", "--genus", "2", "--format", "csv")
    assert code == 0
    assert out == "g,l,genus,ns,nv,epsilon\n2,2,1,1,0,2\n"


def test_orbifolds_json_contributes_flag(capsys) -> None:
    code, out, _ = _run(capsys, "orbifolds", "--genus", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    flagged = [row for row in rows if row["contributes"]]
    assert len(flagged) == 1
    assert flagged[0] == {
        "g": "5",
        "l": "3",
        "genus": "1",
        "ns": "0",
        "nv": "2",
        "epsilon": "8",
        "contributes": True,
    }
    for row in rows:
        for key, value in row.items():
            assert isinstance(value, bool if key == "contributes" else str)


def test_orbifolds_rows_sorted(capsys) -> None:
    code, out, _ = _run(capsys, "orbifolds", "--genus", "8", "--format", "csv")
    assert code == 0
    rows = [tuple(map(int, line.split(","))) for line in out.splitlines()[1:]]
    keys = [row[1:5] for row in rows]
    assert keys == sorted(keys)


def test_orbifolds_rejects_small_genus(capsys) -> None:
    assert _run(capsys, "orbifolds", "--genus", "1")[0] == 2


def test_module_entry_point() -> None:
    result = subprocess.run(
        [sys.executable, "-m", "cubicmaps", "count", "--surface", "orientable", "--genus", "3", "--kind", "rooted"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout == "50050\n"


def test_verify_defaults_pass(capsys, tmp_path) -> None:
    report_path = tmp_path / "report.json"
    code, out, _ = _run(capsys, "verify", "--report", str(report_path))
    assert code == 0
    lines = out.splitlines()
    passes = [line for line in lines if ": PASS" in line]
    assert len(passes) >= 6
    assert lines[-1] == "all verification suites passed"

    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["all_pass"] is True
    assert {suite["name"] for suite in report["suites"]} == {
        "calibration",
        "oracle-equivalence",
        "integrality",
        "sandwich-bounds",
        "specialization",
        "table-reproduction",
    }

    def walk(node):
        if isinstance(node, dict):
            for value in node.values():
                walk(value)
        elif isinstance(node, list):
            for value in node:
                walk(value)
        else:
            assert isinstance(node, (str, bool)), node

    walk(report)


def test_verify_reports_first_failure(capsys, monkeypatch) -> None:
    monkeypatch.setitem(golden.CUBIC_ORIENTABLE, 5, (1, 1, 1))
    code, out, _ = _run(capsys, "verify", "--max-edges-orientable", "3", "--max-edges-full", "3")
    assert code == 1
    assert "table-reproduction: FAIL" in out
    assert "FIRST FAILURE:" in out.splitlines()[-1]


def test_verify_rejects_uncalibratable_limits(capsys) -> None:
    assert _run(capsys, "verify", "--max-edges-full", "2")[0] == 2
