import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from abelcodes.cli import main
from abelcodes.tables import CSV_COLUMNS

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
CODE = str(DATA / "code_7x7.json")


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, *argv):
    rc, out, _ = run(capsys, *argv, "--no-timestamp")
    assert rc == 0, out
    return json.loads(out)


def test_orbit(capsys):
    rec = run_json(capsys, "orbit", "--q", "2", "--n", "45", "--rep", "3")
    assert rec["result"]["orbit"] == [3, 6, 12, 24]
    rec = run_json(capsys, "orbit", "--q", "2", "--dims", "5,9", "--rep", "1,3")
    assert rec["result"]["size"] == 4


def test_bound(capsys):
    rec = run_json(capsys, "bound", "--n", "17", "--set", "1,2,5,6", "--bounds", "ht")
    assert rec["result"]["bch"] == 3 and rec["result"]["value"] == 4
    assert rec["config"]["bounds"] == "ht"


def test_code_commands(capsys):
    assert run_json(capsys, "apparent", "--code", CODE)["result"]["value"] == 9
    assert run_json(capsys, "code-info", "--code", CODE)["result"]["dimension"] == 19
    v = run_json(capsys, "verify", "--code", CODE)["result"]
    assert v["status"] == "proven" and v["d"] == 9
    assert run_json(capsys, "mindist", "--code", CODE)["result"]["min_distance"] == 9
    trace = run_json(capsys, "bmad", "--code", CODE)["result"]["trace"]
    assert set(trace[0]) == {"step", "support_reps", "delta", "m"}


def test_support_input(capsys):
    rec = run_json(capsys, "apparent", "--support", str(DATA / "support_5x7_inner.json"))
    assert rec["result"]["value"] == 6


def test_construct_and_bch(capsys):
    b = "0,2,5,6,8,9,10,15,17,20,21,23,24,25,30,32,35,36,38,39,40"
    rec = run_json(capsys, "construct", "--q", "2", "--dims", "3,45", "--a", "1+X", "--b", b, "--h1", "1", "--h2", "5")
    res = rec["result"]
    assert res["dimension"] == 42 and res["certificate"]["bmad"] == 10
    rec = run_json(capsys, "bch", "--q", "2", "--dims", "3,45", "--gamma", "1,2", "--delta", "2,5", "--offsets", "0,1")
    assert rec["result"]["dimension"] == 58


def test_table_csv_columns(capsys):
    rc, out, _ = run(capsys, "table", "1", "--format", "csv", "--no-timestamp")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_COLUMNS[1] and len(rows) == 13


def test_table_mismatch_exit_code(capsys):
    rc, out, err = run(capsys, "table", "3", "--no-timestamp")
    assert rc == 1
    assert json.loads(err)["error"]["type"] == "TableMismatch"
    assert json.loads(out)["result"]["rows"]


@pytest.mark.parametrize("argv", [
    ["orbit", "--q", "6", "--n", "5", "--rep", "1"],
    ["orbit", "--p", "2", "--dims", "4,5", "--rep", "1,1"],
    ["bound", "--n", "7", "--set", "1", "--bounds", "nope"],
    ["mindist", "--code", "/no/such/file.json"],
    ["apparent", "--code", CODE, "--threads", "0"],
    ["apparent", "--code", CODE, "--config", '{"colour": 1}'],
    ["construct", "--q", "2", "--dims", "3,7", "--a", "0,2", "--b", "0,1,3"],
])
def test_errors_exit_2_with_json(capsys, argv):
    rc, out, _ = run(capsys, *argv)
    assert rc == 2
    err = json.loads(out)["error"]
    assert err["type"] and err["message"]


def test_config_file_is_echoed(capsys):
    rec = run_json(capsys, "apparent", "--code", CODE, "--config", str(DATA / "config_example.json"))
    assert rec["config"]["bounds"] == "bch,ht" and rec["config"]["orbit_cap"] == 20
    assert "timestamp" not in rec


def test_timestamp_present_by_default(capsys):
    rc, out, _ = run(capsys, "orbit", "--q", "2", "--n", "7", "--rep", "1")
    assert "timestamp" in json.loads(out)


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "abelcodes", "bmad", "--code", CODE, "--no-timestamp"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--threads", "3"], capture_output=True, check=True).stdout
    assert a and json.loads(a)["result"] == json.loads(b)["result"]
    assert a == subprocess.run(cmd, capture_output=True, check=True).stdout


def test_text_format(capsys):
    rc, out, _ = run(capsys, "apparent", "--code", CODE, "--format", "text", "--no-timestamp")
    assert rc == 0 and "value: 9" in out


def test_mindist_sampling(capsys):
    rec = run_json(capsys, "mindist", "--code", '{"p": 2, "dims": [5, 7]}', "--trials", "50", "--seed", "4")
    res = rec["result"]
    assert res["min_distance"] is None and res["upper_bound"] >= 1 and "skipped" in res
    assert rec["config"]["seed"] == 4
    again = run_json(capsys, "mindist", "--code", '{"p": 2, "dims": [5, 7]}', "--trials", "50", "--seed", "4")
    assert again == rec


def test_table_output_is_deterministic(capsys):
    first = run(capsys, "table", "2", "--no-timestamp")[1]
    assert first == run(capsys, "table", "2", "--no-timestamp")[1]
    assert "seconds" not in json.loads(first)["result"]
