import json

import pytest

from ulisperm import Permutation
from ulisperm import verify as verify_mod
from ulisperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- rank ------------------------------------------------------------------

def test_rank(capsys):
    code, out, err = run(capsys, "rank", "2 1 3")
    assert (code, out, err) == (0, "2 2 1\n", "")


def test_rank_compact_input(capsys):
    code, out, _ = run(capsys, "rank", "34256178")
    assert code == 0
    assert out == "6 5 5 4 3 3 2 1\n"


def test_rank_invert(capsys):
    code, out, _ = run(capsys, "rank", "--invert", "1 1 1")
    assert (code, out) == (0, "3 2 1\n")


def test_rank_warns_on_pattern(capsys):
    code, out, err = run(capsys, "rank", "1 3 2")
    assert code == 0
    assert out == "2 1 1\n"
    assert "contains 132" in err and "still well-defined" in err


def test_rank_bad_input(capsys):
    code, _, err = run(capsys, "rank", "1 1 2")
    assert code == 2
    assert err.startswith("error:")


def test_rank_invert_invalid_sequence(capsys):
    code, _, err = run(capsys, "rank", "--invert", "1 3 1")
    assert code == 2
    assert "drop" in err


# --- map -------------------------------------------------------------------

def test_map(capsys):
    code, out, _ = run(capsys, "map", "2 1 3")
    assert (code, out) == (0, "1 2 3\n")


def test_map_trace(capsys):
    code, out, _ = run(capsys, "map", "3 2 1", "--trace")
    assert code == 0
    assert out == "ranks:  1 1 1\nlifted: 1 2 1\n3 1 2\n"


def test_map_rejects_unique_subsequence(capsys):
    code, _, err = run(capsys, "map", "1 2 3")
    assert code == 2
    assert "already has" in err


def test_map_rejects_pattern(capsys):
    code, _, err = run(capsys, "map", "1 3 2")
    assert code == 2
    assert "contains 132" in err


def test_map_trace_rejects_pattern(capsys):
    code, _, err = run(capsys, "map", "1 3 2", "--trace")
    assert code == 2
    assert "contains 132" in err


# --- avoiders / sequences ----------------------------------------------------

def test_avoiders_list(capsys):
    code, out, _ = run(capsys, "avoiders", "3")
    assert code == 0
    assert out.splitlines() == ["1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]


def test_avoiders_count_other_pattern(capsys):
    code, out, _ = run(capsys, "avoiders", "4", "--count", "--pattern", "3 2 1")
    assert (code, out) == (0, "14\n")


def test_avoiders_over_cap(capsys):
    code, _, err = run(capsys, "avoiders", "13", "--count")
    assert code == 2
    assert "capped" in err


def test_avoiders_json(capsys):
    code, out, _ = run(capsys, "avoiders", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == ["1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]


def test_sequences_list(capsys):
    code, out, _ = run(capsys, "sequences", "3")
    assert out.splitlines() == ["1 1 1", "1 2 1", "2 1 1", "2 2 1", "3 2 1"]
    assert code == 0


def test_sequences_count_csv(capsys):
    code, out, _ = run(capsys, "sequences", "12", "--count", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["count", "208012"]


# --- census --------------------------------------------------------------------

def test_census_plain(capsys):
    code, out, _ = run(capsys, "census", "--max-n", "3", "--engine", "enumerative")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "1 1 1 0 1/1 1"
    assert lines[2] == "2 2 1 1 1/2 0.5"
    assert lines[3] == "3 5 3 2 3/5 0.6"
    assert "every ratio >= 1/2" in lines[4]


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--max-n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][1] == {
        "n": 2, "catalan": "2", "u": "1", "v": "1",
        "ratio_num": "1", "ratio_den": "2",
    }
    assert payload["summary"]["equality_at"] == [2]
    assert payload["summary"]["all_at_least_half"] is True


def test_census_csv_summary_on_stderr(capsys):
    code, out, err = run(capsys, "census", "--max-n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,catalan,u,v,ratio_num,ratio_den"
    assert out.splitlines()[2] == "2,2,1,1,1,2"
    assert "summary" in err


def test_census_engines_agree(capsys):
    _, enum_out, _ = run(capsys, "census", "--max-n", "9",
                         "--engine", "enumerative", "--format", "json")
    _, dp_out, _ = run(capsys, "census", "--max-n", "9",
                       "--engine", "dp", "--format", "json")
    assert enum_out == dp_out


def test_census_byte_identical(capsys):
    first = run(capsys, "census", "--max-n", "6", "--format", "json")
    second = run(capsys, "census", "--max-n", "6", "--format", "json")
    assert first == second


def test_census_over_cap(capsys):
    code, _, err = run(capsys, "census", "--max-n", "13", "--engine", "enumerative")
    assert code == 2
    assert "capped" in err


# --- verify ---------------------------------------------------------------------

def test_verify_plain(capsys):
    code, out, err = run(capsys, "verify", "catalan", "--max-n", "5")
    assert code == 0
    assert out.startswith("PASS catalan max_n=5")
    assert err.startswith("duration_ms=")


def test_verify_json(capsys):
    code, out, err = run(capsys, "verify", "bijection", "--max-n", "5",
                         "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["parameters"] == {"max_n": 5, "suite": "bijection"}
    assert payload["outcome"]["status"] == "pass"
    assert "duration_ms" not in payload


def test_verify_stdout_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "oeis", "--max-n", "5", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "oeis", "--max-n", "5", "--format", "json")
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2


def test_verify_over_cap(capsys):
    code, _, err = run(capsys, "verify", "oeis", "--max-n", "12")
    assert code == 2
    assert "capped" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    real_invert = verify_mod.invert

    def broken_invert(t):
        return Permutation(tuple(reversed(real_invert(t).entries)))

    monkeypatch.setattr(verify_mod, "invert", broken_invert)
    code, out, _ = run(capsys, "verify", "bijection", "--max-n", "4")
    assert code == 1
    assert out.startswith("FAIL bijection")
    assert "counterexample" in out


# --- oeis -----------------------------------------------------------------------

def test_oeis_offline(capsys):
    code, out, _ = run(capsys, "oeis")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 1"
    assert lines[2] == "3 3"


def test_oeis_bad_id(capsys):
    code, _, err = run(capsys, "oeis", "--id", "B12")
    assert code == 2
    assert "six digits" in err


def test_oeis_json(capsys):
    code, out, _ = run(capsys, "oeis", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert entries[0] == {"index": 1, "value": "1"}
