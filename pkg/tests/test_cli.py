"""Command line behavior: output formats, exit codes, stability."""

import json
import subprocess
import sys

import pytest

from collatzkit.cli import main

TABLE2_CSV = """n2,x,n1,class,generates
5,1,3,multiple-of-three,false
5,3,13,even-power,true
5,5,53,odd-power,true
5,7,213,multiple-of-three,false
5,9,853,even-power,true
5,11,3413,odd-power,true
5,13,13653,multiple-of-three,false
5,15,54613,even-power,true
5,17,218453,odd-power,true
11,1,7,even-power,true
11,3,29,odd-power,true
11,5,117,multiple-of-three,false
11,7,469,even-power,true
11,9,1877,odd-power,true
11,11,7509,multiple-of-three,false
11,13,30037,even-power,true
11,15,120149,odd-power,true
11,17,480597,multiple-of-three,false
17,1,11,odd-power,true
17,3,45,multiple-of-three,false
17,5,181,even-power,true
17,7,725,odd-power,true
17,9,2901,multiple-of-three,false
17,11,11605,even-power,true
17,13,46421,odd-power,true
17,15,185685,multiple-of-three,false
17,17,742741,even-power,true
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_tables_csv_matches_reference(capsys):
    code, out = run_cli(
        capsys, "tables", "--class", "odd", "--rows", "3", "--cols", "9",
        "--format", "csv",
    )
    assert code == 0
    assert out == TABLE2_CSV


def test_tables_output_stable(capsys):
    args = ("tables", "--class", "even", "--rows", "4", "--cols", "9", "--format", "json")
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second


def test_range_iter_json_single_state(capsys):
    code, out = run_cli(
        capsys, "range-iter", "--start", "19", "--iters", "1", "--format", "json"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1
    state = json.loads(lines[0])
    assert state["chosen"] == 25
    assert state["n_odd"] == 29 and state["n_even"] == 25


def test_range_iter_stall_at_p3_is_expected(capsys):
    code, out = run_cli(capsys, "range-iter", "--start", "5", "--iters", "5")
    assert code == 0  # p = 3 stall is documented behavior, not a failure
    assert "stalled" in out


def test_totals_json(capsys):
    code, out = run_cli(capsys, "totals", "--kmax", "2", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["T"] == 3
    assert reports[0]["identityHolds"] is True
    assert set(reports[0]) == {"kN", "N", "To", "Te", "T", "bruteCount", "identityHolds"}


def test_seq_json(capsys):
    code, out = run_cli(capsys, "seq", "--start", "27", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["steps"] == 111 and info["peak"] == 9232
    assert info["chain_product"] == "1/27"


def test_verify_forward_text(capsys):
    code, out = run_cli(capsys, "verify-forward", "--bound", "999", "--shards", "2")
    assert code == 0
    assert "verified=500" in out


def test_verify_forward_budget_failures_exit_one(capsys):
    code, out = run_cli(
        capsys, "verify-forward", "--bound", "99", "--max-steps", "1"
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_inverse(capsys):
    code, out = run_cli(
        capsys, "verify-inverse", "--bound", "29", "--value-cap", "10000",
        "--x-max", "40", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["unreached"] == []


def test_cycle_scan_ok(capsys):
    code, out = run_cli(capsys, "cycle-scan", "--bound", "100", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"members": [1, 4, 2]}]


def test_cycle_scan_budget_too_small_fails(capsys):
    # one step per start cannot close the loop, so the expected cycle is
    # missing and the check reports failure
    code, _ = run_cli(capsys, "cycle-scan", "--bound", "100", "--max-steps", "1")
    assert code == 1


def test_assumption_table_text(capsys):
    code, out = run_cli(capsys, "assumption-table", "--start", "19")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6
    assert lines[0].startswith("4 -> 2 -> *1*")
    assert lines[2].endswith("| 7,11,13,17")
    assert len({line.index("|") for line in lines}) == 1  # claims column aligned


def test_assumption_table_json_bold_flags(capsys):
    code, out = run_cli(capsys, "assumption-table", "--start", "19", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    last = rows[-1]  # start 19: values 19, 58, 29, 88, 44, 22
    assert last["values"] == [19, 58, 29, 88, 44, 22]
    assert last["bold"] == [True, False, True, False, False, False]


def test_cross_check(capsys):
    code, out = run_cli(capsys, "cross-check", "--kmax", "4", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert all(e["countsMatch"] for e in entries)


def test_uniqueness(capsys):
    code, out = run_cli(capsys, "uniqueness", "--bound", "1000", "--format", "json")
    assert code == 0
    assert json.loads(out)["violations"] == []


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["tables", "--class", "grey", "--rows", "1", "--cols", "1"])
    assert err.value.code == 2


def test_bad_value_exit_code(capsys):
    code, _ = run_cli(capsys, "range-iter", "--start", "4", "--iters", "1")
    assert code == 2
    code, _ = run_cli(capsys, "totals", "--kmax", "1")
    assert code == 2


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "collatzkit", "totals", "--kmax", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "kN=3" in proc.stdout


def test_missing_subcommand_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "collatzkit"], capture_output=True, text=True
    )
    assert proc.returncode == 2
