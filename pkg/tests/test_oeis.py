import os

import pytest

from ulisperm import (
    BFileEntry,
    FetchFallbackWarning,
    InputError,
    fetch_bfile,
    fixture_text,
    parse_bfile,
    ulis_count_all,
)
from ulisperm.oeis import CACHE_ENV_VAR, BFileParseError, bfile_url


# --- parsing -----------------------------------------------------------------

def test_parse_basic():
    assert parse_bfile("1 1\n2 1\n") == [BFileEntry(1, 1), BFileEntry(2, 1)]


def test_parse_skips_comments_and_blanks():
    assert parse_bfile("# comment\n\n3 3\n") == [BFileEntry(3, 3)]


def test_parse_rejects_non_integer_with_line_number():
    with pytest.raises(BFileParseError, match="line 2"):
        parse_bfile("1 1\n2 x\n")


def test_parse_rejects_wrong_token_count():
    with pytest.raises(BFileParseError, match="line 1"):
        parse_bfile("1 2 3\n")


def test_parse_rejects_non_monotonic():
    with pytest.raises(BFileParseError, match="line 3") as exc:
        parse_bfile("1 1\n5 2\n4 3\n")
    assert exc.value.line_number == 3


def test_parse_rejects_negative_value():
    with pytest.raises(BFileParseError, match="negative"):
        parse_bfile("1 -4\n")


# --- the bundled fixture --------------------------------------------------------

def test_fixture_parses_totally():
    entries = parse_bfile(fixture_text())
    assert [e.index for e in entries] == list(range(1, len(entries) + 1))
    assert len(entries) >= 10


def test_fixture_matches_brute_force_small():
    table = {e.index: e.value for e in parse_bfile(fixture_text())}
    assert table[3] == ulis_count_all(3) == 3
    for n in range(1, 8):
        assert table[n] == ulis_count_all(n)


# --- fetching --------------------------------------------------------------------

def test_fetch_offline_serves_fixture():
    assert fetch_bfile("A167995") == fixture_text()


def test_fetch_rejects_bad_ids():
    for bad in ("B12", "A123", "A1234567", "a167995", "167995"):
        with pytest.raises(InputError, match="six digits"):
            fetch_bfile(bad)


def test_fetch_offline_unknown_id():
    with pytest.raises(InputError, match="no bundled fixture"):
        fetch_bfile("A000001")


def test_url_scheme():
    assert bfile_url("A167995") == "https://oeis.org/A167995/b167995.txt"


def test_fetch_online_uses_opener_and_cache(tmp_path):
    calls = []

    def opener(url, timeout):
        calls.append(url)
        return "1 1\n2 1\n"

    text = fetch_bfile("A167995", online=True, cache_dir=str(tmp_path), opener=opener)
    assert text == "1 1\n2 1\n"
    assert calls == [bfile_url("A167995")]
    assert (tmp_path / "b167995.txt").read_text() == text

    again = fetch_bfile("A167995", online=True, cache_dir=str(tmp_path), opener=opener)
    assert again == text
    assert len(calls) == 1  # cache hit, no second fetch


def test_fetch_online_falls_back_with_warning():
    def opener(url, timeout):
        raise OSError("no route to host")

    with pytest.warns(FetchFallbackWarning, match="bundled fixture"):
        text = fetch_bfile("A167995", online=True, opener=opener)
    assert text == fixture_text()


def test_fetch_online_failure_without_fixture():
    def opener(url, timeout):
        raise OSError("no route to host")

    with pytest.raises(InputError, match="no fixture"):
        fetch_bfile("A000001", online=True, opener=opener)


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))

    def opener(url, timeout):
        return "1 7\n"

    fetch_bfile("A167995", online=True, opener=opener)
    assert (tmp_path / "b167995.txt").read_text() == "1 7\n"
    assert os.listdir(tmp_path) == ["b167995.txt"]  # no leftover temp files
