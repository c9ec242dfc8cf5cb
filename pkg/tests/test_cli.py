"""Command-line behavior: formats, exit codes, cache, and parallel counts."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from helpers import run_cli
from permcodec.cli import CACHE_ENV, format_perm, parse_perm


def test_parse_perm_forms():
    assert parse_perm("3612745") == (3, 6, 1, 2, 7, 4, 5)
    assert parse_perm("3,6,1,2,7,4,5") == (3, 6, 1, 2, 7, 4, 5)
    assert parse_perm("10,9,8,7,6,5,4,3,2,1") == (10, 9, 8, 7, 6, 5, 4, 3, 2, 1)
    with pytest.raises(ValueError):
        parse_perm("12345678910")  # contiguous beyond length 9 is ambiguous
    with pytest.raises(ValueError):
        parse_perm("1,2,x")
    with pytest.raises(ValueError):
        parse_perm("13")  # not a bijection on 1..2


def test_format_perm_forms():
    assert format_perm((3, 1, 2)) == "312"
    assert format_perm(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"


def test_count_rows():
    code, out, _ = run_cli(["count", "--pattern", "1324", "--max", "6", "--no-cache"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,avoiders"
    assert lines[-1] == "6,513"


def test_count_catalan_prefix():
    code, out, _ = run_cli(["count", "--pattern", "123", "--max", "5", "--no-cache"])
    assert code == 0
    counts = [line.split(",")[1] for line in out.strip().splitlines()[1:]]
    assert counts == ["1", "2", "5", "14", "42"]


def test_count_json_round_trips():
    code, out, _ = run_cli(["count", "--pattern", "1324", "--max", "4",
                            "--no-cache", "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert rows[-1] == {"n": 4, "avoiders": "23"}


def test_usage_errors_exit_two():
    assert run_cli(["count", "--pattern", "1324", "--max", "0"])[0] == 2
    assert run_cli(["count", "--pattern", "1324", "--max", "12"])[0] == 2
    assert run_cli(["count", "--pattern", "1342x", "--max", "3"])[0] == 2
    assert run_cli(["count", "--pattern", "1324", "--max", "3", "--jobs", "0"])[0] == 2
    assert run_cli(["decode", "AX", "AB"])[0] == 2
    assert run_cli(["decode", "A", "AB"])[0] == 2
    assert run_cli(["nonsense"])[0] == 2


def test_enumerate_rows():
    code, out, _ = run_cli(["enumerate", "--pattern", "1324", "--max", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,permutation"
    assert lines[1:] == ["1,1", "2,12", "2,21",
                         "3,123", "3,132", "3,213", "3,231", "3,312", "3,321"]


def test_encode_decode_round_trip():
    code, out, _ = run_cli(["encode", "3612745"])
    assert code == 0 and out.strip() == "ABABBCD ABACDBB"
    code, out, _ = run_cli(["decode", "ABABBCD", "ABACDBB"])
    assert code == 0 and out.strip() == "3612745"
    code, out, _ = run_cli(["decode", "A", "A"])
    assert code == 0 and out.strip() == "1"


def test_encode_json():
    code, out, _ = run_cli(["encode", "321", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"position_word": "AAA", "value_word": "AAA"}


def test_decode_failure_is_tagged_and_nonzero():
    code, out, err = run_cli(["decode", "AB", "BA"])
    assert code == 1
    assert out == ""
    assert "[greedy]" in err


def test_words_rows():
    code, out, _ = run_cli(["words", "--max", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,words"
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "4", "15", "56", "209"]


def test_words_json():
    code, out, _ = run_cli(["words", "--max", "2", "--format", "json"])
    assert json.loads(out)[-1] == {"n": 2, "words": "15"}


def test_verify_json_and_exit():
    code, out, err = run_cli(["verify", "--max", "4", "--no-cache"])
    assert code == 0
    reports = json.loads(out)
    assert [r["n"] for r in reports] == [1, 2, 3, 4]
    assert reports[0]["ok_pair"] is False  # boundary case, not asserted
    assert all(r["ok_16"] and r["ok_headline"] for r in reports)
    assert "n=4" in err


def test_verify_csv_header():
    code, out, _ = run_cli(["verify", "--max", "2", "--no-cache", "--format", "csv"])
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("n,avoiders,pair_bound,bound_16,headline")


def test_report_document(tmp_path):
    target = tmp_path / "report.json"
    code, out, err = run_cli(["report", str(target), "--max", "3", "--no-cache"])
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["schema_version"] == 1
    assert doc["pattern"] == "1324"
    assert doc["cb_free_counts"] == ["1", "4", "15", "56"]
    assert [r["n"] for r in doc["reports"]] == [1, 2, 3]
    assert doc["pair_bound_below_headline"] is True
    assert "hold" in err


def test_cache_round_trip_and_identity(tmp_path):
    cache = tmp_path / "cache.json"
    argv = ["count", "--pattern", "1324", "--max", "5", "--cache", str(cache)]
    cold = run_cli(argv)
    assert cold[0] == 0 and cache.exists()
    stored = json.loads(cache.read_text())
    assert stored["version"] == 1
    assert stored["counts"]["1324:5"] == "103"
    warm = run_cli(argv)
    bare = run_cli(["count", "--pattern", "1324", "--max", "5", "--no-cache"])
    assert cold[1] == warm[1] == bare[1]


def test_corrupt_cache_is_ignored(tmp_path):
    cache = tmp_path / "cache.json"
    cache.write_text("{not json")
    argv = ["count", "--pattern", "1324", "--max", "4", "--cache", str(cache)]
    code, out, _ = run_cli(argv)
    assert code == 0
    assert out.strip().splitlines()[-1] == "4,23"
    assert json.loads(cache.read_text())["counts"]["1324:4"] == "23"


def test_cache_env_var(tmp_path, monkeypatch):
    cache = tmp_path / "env-cache.json"
    monkeypatch.setenv(CACHE_ENV, str(cache))
    code, _, _ = run_cli(["count", "--pattern", "1324", "--max", "3"])
    assert code == 0 and cache.exists()


def test_verify_uses_cache_file(tmp_path):
    cache = tmp_path / "cache.json"
    first = run_cli(["verify", "--max", "3", "--cache", str(cache)])
    second = run_cli(["verify", "--max", "3", "--cache", str(cache)])
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    assert json.loads(cache.read_text())["counts"]["1324:3"] == "6"


def test_parallel_count_matches_serial():
    serial = run_cli(["count", "--pattern", "1324", "--max", "5", "--no-cache"])
    parallel = run_cli(["count", "--pattern", "1324", "--max", "5",
                        "--no-cache", "--jobs", "2"])
    assert serial[0] == parallel[0] == 0
    assert serial[1] == parallel[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "permcodec", "encode", "3612745"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "ABABBCD ABACDBB"
