from fractions import Fraction

import pytest

from ulisperm import (
    InputError,
    catalan,
    census_dp,
    census_enumerative,
    census_rows_dp,
    ulis_count_all,
)
from ulisperm.census import CSV_COLUMNS

# Frozen small rows, derived once by classifying every rank sequence of each
# length by maximum multiplicity (and double-checked against the avoider
# side by the characterization suite).
SMALL_ROWS = {
    1: (1, 1, 0),
    2: (2, 1, 1),
    3: (5, 3, 2),
    4: (14, 8, 6),
    5: (42, 23, 19),
    6: (132, 71, 61),
    7: (429, 229, 200),
    8: (1430, 759, 671),
}


def test_enumerative_small_rows():
    for n, (total, u, v) in SMALL_ROWS.items():
        row = census_enumerative(n)
        assert (row.total, row.u, row.v) == (total, u, v)
        assert row.ratio == Fraction(u, total)


def test_ratio_is_exactly_half_at_two():
    assert census_enumerative(2).ratio == Fraction(1, 2)


def test_dp_equals_enumerative():
    dp_rows = {row.n: row for row in census_rows_dp(10)}
    for n in range(1, 11):
        assert dp_rows[n] == census_enumerative(n)


def test_dp_single_row():
    assert (census_dp(1).total, census_dp(1).u, census_dp(1).v) == (1, 1, 0)
    assert census_dp(3) == census_enumerative(3)
    row = census_dp(12)
    assert row.u + row.v == 208012


def test_dp_rows_sum_to_catalan_and_keep_floor():
    half = Fraction(1, 2)
    for row in census_rows_dp(60):
        assert row.total == catalan(row.n)
        assert row.u >= row.v
        assert row.ratio >= half
        assert (row.ratio == half) == (row.n == 2)


def test_dp_deterministic():
    first = list(census_rows_dp(25))
    second = list(census_rows_dp(25))
    assert first == second


def test_census_caps():
    with pytest.raises(InputError, match="capped"):
        list(census_rows_dp(301))
    with pytest.raises(InputError, match="capped"):
        census_enumerative(13)
    with pytest.raises(InputError):
        list(census_rows_dp(0))


def test_row_serialization():
    record = census_dp(3).to_json_dict()
    assert record == {
        "n": 3, "catalan": "5", "u": "3", "v": "2",
        "ratio_num": "3", "ratio_den": "5",
    }
    assert tuple(record) == CSV_COLUMNS


def test_ulis_count_all_small():
    assert [ulis_count_all(n) for n in range(0, 7)] == [1, 1, 1, 3, 10, 44, 238]


def test_ulis_count_all_cap():
    with pytest.raises(InputError, match="capped"):
        ulis_count_all(11)
    assert ulis_count_all(5, cap=5) == 44
