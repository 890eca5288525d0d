import io
import json

import pytest

from pentaswan import cli
from pentaswan.gf2poly import PentShape, factor_count, pent_poly
from pentaswan.search import read_csv, stats, survey, enumerate_shapes
from pentaswan.swan import pent_discriminant_closed_form
from pentaswan.zpoly import lift, power_sums


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- predict ---------------------------------------------------------------

def test_predict_reducible(capsys):
    code, out, _ = run(capsys, "predict", "--n", "11", "--s", "2")
    assert code == 0
    assert "reducible" in out and "3" in out


def test_predict_inconclusive(capsys):
    code, out, _ = run(capsys, "predict", "--n", "7", "--s", "2")
    assert code == 0
    assert "no certificate" in out and "inconclusive" in out


def test_predict_json_matches_library(capsys):
    code, out, _ = run(capsys, "predict", "--n", "17", "--s", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    shape = PentShape(17, 4)
    assert payload["certified_reducible"] is False
    assert payload["discriminant_mod8"] == pent_discriminant_closed_form(shape)
    assert payload["parity"] == "odd"


def test_predict_trinomial(capsys):
    code, out, _ = run(capsys, "predict", "--n", "8", "--k", "3")
    assert code == 0 and "reducible" in out
    code, out, _ = run(capsys, "predict", "--n", "7", "--k", "6")
    assert code == 0 and "inconclusive" in out


def test_predict_usage_errors(capsys):
    assert run(capsys, "predict", "--n", "7", "--s", "3")[0] == 1  # shape invalid
    assert run(capsys, "predict", "--n", "7")[0] == 1
    assert run(capsys, "predict", "--n", "13", "--s", "1")[0] == 1  # odd s
    assert run(capsys, "predict", "--s", "2")[0] == 1


# --- test (brute force) -------------------------------------------------------

def test_test_hex_poly(capsys):
    code, out, _ = run(capsys, "test", "--poly", "7")
    assert code == 0
    assert out.strip() == "irreducible, 1 factor"


def test_test_shape_matches_library(capsys):
    code, out, _ = run(capsys, "test", "--n", "9", "--s", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    total, parity = factor_count(pent_poly(PentShape(9, 2)))
    assert payload["factors"] == total == 3
    assert payload["parity"] == parity == "odd"
    assert payload["irreducible"] is False


def test_test_trinomial(capsys):
    code, out, _ = run(capsys, "test", "--n", "7", "--k", "6")
    assert code == 0 and "irreducible" in out


def test_test_usage_errors(capsys):
    assert run(capsys, "test", "--poly", "ZZ")[0] == 1
    assert run(capsys, "test", "--poly", "1")[0] == 1  # degree 0
    assert run(capsys, "test")[0] == 1


# --- disc ------------------------------------------------------------------------

def test_disc_both_routes_agree(capsys):
    code, out, _ = run(capsys, "disc", "--n", "7", "--s", "2", "--oracle", "both")
    assert code == 0
    assert "closed_form: 1" in out and "resultant: 1" in out and "agree" in out


def test_disc_resultant_only_from_hex(capsys):
    p = pent_poly(PentShape(11, 2))
    code, out, _ = run(capsys, "disc", "--poly", p.to_hex(), "--oracle", "resultant")
    assert code == 0 and "resultant: 5" in out


def test_disc_usage_errors(capsys):
    assert run(capsys, "disc", "--poly", "7", "--oracle", "closed")[0] == 1
    assert run(capsys, "disc", "--oracle", "both")[0] == 1


# --- powersums ----------------------------------------------------------------------

def test_powersums_exact_matches_library(capsys):
    code, out, _ = run(capsys, "powersums", "--n", "13", "--s", "2", "--upto", "11")
    assert code == 0
    table = power_sums(lift(pent_poly(PentShape(13, 2))), 11)
    lines = out.strip().splitlines()
    assert lines[0] == "S_0 = 13"
    assert lines[11] == f"S_11 = {table[11]}"
    assert len(lines) == 12


def test_powersums_mod_2k(capsys):
    code, out, _ = run(
        capsys, "powersums", "--n", "13", "--s", "2", "--upto", "8",
        "--mod", "2^3", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["modulus"] == 8
    assert payload["values"]["2"] == 6  # -2 mod 8


def test_powersums_bad_mod(capsys):
    assert run(capsys, "powersums", "--n", "13", "--s", "2", "--upto", "4",
               "--mod", "8")[0] == 1


# --- search / stats --------------------------------------------------------------------

def test_search_csv_to_file_and_stats(capsys, tmp_path):
    out_path = tmp_path / "run.csv"
    code, _, err = run(
        capsys, "search", "--n-min", "7", "--n-max", "32", "--no-prune",
        "--jobs", "1", "--out", str(out_path),
    )
    assert code == 0 and "classified 35 shapes" in err
    with open(out_path) as f:
        records = read_csv(f)
    irr = {(r.n, r.s) for r in records if r.outcome == "irr"}
    assert irr == {(7, 2), (17, 2), (17, 4), (23, 6), (25, 6), (31, 2), (31, 6), (31, 8)}

    code, out, _ = run(capsys, "stats", str(out_path))
    assert code == 0
    payload = json.loads(out)
    expected = stats(records).to_json_dict()
    assert payload == expected
    assert payload["total_irreducible"] == 8


def test_search_jsonl_stdout(capsys):
    code, out, _ = run(
        capsys, "search", "--n-min", "7", "--n-max", "14", "--format", "jsonl",
        "--jobs", "1",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert [(r["n"], r["s"]) for r in rows] == [(7, 2), (9, 2), (11, 2), (13, 2), (13, 4)]


def test_search_resume_equivalent_to_one_shot(capsys, tmp_path):
    out_path = tmp_path / "resumable.csv"
    run(capsys, "search", "--n-min", "7", "--n-max", "30", "--jobs", "1",
        "--out", str(out_path))
    # simulate an interrupted run: chop the file mid-way through the last column
    lines = out_path.read_text().splitlines(keepends=True)
    out_path.write_text("".join(lines[:-2]))
    code, _, _ = run(
        capsys, "search", "--n-min", "7", "--n-max", "60", "--jobs", "1",
        "--out", str(out_path), "--resume",
    )
    assert code == 0
    with open(out_path) as f:
        resumed = [r.key for r in read_csv(f)]
    direct = [r.key for r in survey(enumerate_shapes(7, 60))]
    assert resumed == direct


def test_search_usage_errors(capsys):
    assert run(capsys, "search", "--n-max", "20", "--format", "xml")[0] == 1
    assert run(capsys, "search", "--n-max", "20", "--resume")[0] == 1
    assert run(capsys, "search", "--n-min", "3", "--n-max", "20")[0] == 1


def test_stats_reads_jsonl_and_stdin_dash(capsys, tmp_path, monkeypatch):
    out_path = tmp_path / "run.jsonl"
    run(capsys, "search", "--n-min", "7", "--n-max", "20", "--format", "jsonl",
        "--jobs", "1", "--out", str(out_path))
    code, out, _ = run(capsys, "stats", str(out_path))
    assert code == 0
    expected = sum(1 for _ in enumerate_shapes(7, 20))
    assert json.loads(out)["total_checked"] == expected

    monkeypatch.setattr("sys.stdin", io.StringIO(out_path.read_text()))
    code, out, _ = run(capsys, "stats", "-")
    assert code == 0
    assert json.loads(out)["total_checked"] == expected


def test_stats_missing_file(capsys):
    assert run(capsys, "stats", "/nonexistent/run.csv")[0] == 1


# --- verify -----------------------------------------------------------------------------

def test_verify_small_bounds(capsys):
    code, out, _ = run(
        capsys, "verify", "--parity-max", "40", "--thm1-max", "40",
        "--disc-max", "20", "--trinomial-max", "30", "--powersum-max", "40",
        "--pair-max", "30", "--jobs", "1",
    )
    assert code == 0
    assert out.count("PASS") == 5 and "FAIL" not in out


# --- plumbing ----------------------------------------------------------------------------

def test_unknown_command_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1


def test_version_flag():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
