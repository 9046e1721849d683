"""Exact counts of 132-avoiders with and without a unique longest increasing
subsequence.

Two independent engines produce the same rows:

- `census_enumerative` walks every rank sequence of length n and classifies
  it by maximum multiplicity.  Transparent, but bounded by the Catalan
  explosion (the default cap is 12).
- `census_dp` runs an exact dynamic program over the same family, building
  sequences right to left.  The state is (leftmost value, maximum so far,
  whether the maximum is currently unique); prepending x to a suffix whose
  leftmost value is w is legal for 1 <= x <= w + 1.  Suffix sums over w turn
  the transition into O(1) per state, so a sweep to n = 300 takes seconds.
  All counts are exact big integers.

Also here: the brute-force count of ALL permutations (no avoidance
restriction) with a unique longest increasing subsequence, used to
cross-check the bundled OEIS data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ConstructionError, InputError
from .permutations import ALL_PERMUTATION_CAP
from .ranks import SEQUENCE_CAP, catalan, enumerate_rank_sequences
from .ulis import max_profile

DP_CAP = 300


@dataclass(frozen=True)
class CensusRow:
    """Exact counts for one length: `u` avoiders with a unique longest
    increasing subsequence, `v` without, `total` their Catalan sum, and the
    exact ratio u/total."""

    n: int
    total: int
    u: int
    v: int
    ratio: Fraction

    def __post_init__(self):
        assert self.u + self.v == self.total
        assert self.ratio == Fraction(self.u, self.total)

    def to_json_dict(self) -> dict:
        """Big integers as decimal strings; exact, never floats."""
        return {
            "n": self.n,
            "catalan": str(self.total),
            "u": str(self.u),
            "v": str(self.v),
            "ratio_num": str(self.ratio.numerator),
            "ratio_den": str(self.ratio.denominator),
        }


CSV_COLUMNS = ("n", "catalan", "u", "v", "ratio_num", "ratio_den")


def _make_row(n: int, u: int, v: int) -> CensusRow:
    total = u + v
    if total != catalan(n):
        raise ConstructionError(
            f"census bug: u + v = {total} differs from catalan({n}) = {catalan(n)}"
        )
    return CensusRow(n, total, u, v, Fraction(u, total))


def census_enumerative(n: int, *, cap: int = SEQUENCE_CAP) -> CensusRow:
    """Count by walking all rank sequences of length n.

    >>> census_enumerative(3)
    CensusRow(n=3, total=5, u=3, v=2, ratio=Fraction(3, 5))
    """
    u = v = 0
    for t in enumerate_rank_sequences(n, cap=cap):
        if max_profile(t).unique:
            u += 1
        else:
            v += 1
    return _make_row(n, u, v)


def census_rows_dp(max_n: int, *, cap: int = DP_CAP) -> Iterator[CensusRow]:
    """Yield exact rows for n = 1..max_n in one incremental sweep.

    State after processing suffixes of length L: columns[(m, unique)] is a
    list over leftmost value w = 1..m of counts of valid suffixes with
    maximum m and the given uniqueness.  Prepending x maps
    (w, m, unique) -> (x, max(m, x), unique') for x <= w + 1, where unique'
    is True if x > m, False if x == m, else unchanged.  For fixed target x
    the sources form the tail w >= x - 1, hence the suffix sums.
    """
    if max_n < 1:
        raise InputError(f"census needs n >= 1, got {max_n}")
    if max_n > cap:
        raise InputError(
            f"dynamic-program census capped at n = {cap} (requested {max_n}); "
            f"pass a higher cap to override"
        )
    columns: dict[tuple[int, bool], list[int]] = {(1, True): [1]}
    yield _make_row(1, 1, 0)
    for _length in range(2, max_n + 1):
        new: dict[tuple[int, bool], list[int]] = {}
        for (m, unique), column in columns.items():
            # acc[k] = sum of column over the top k+1 values of w, so the
            # sum over w >= x is acc[m - x].
            acc = list(itertools.accumulate(reversed(column)))
            target = new.setdefault((m, unique), [0] * m)
            for x in range(1, m):
                target[x - 1] += acc[m - max(1, x - 1)]
            # x == m ties the maximum
            tied = new.setdefault((m, False), [0] * m)
            tied[m - 1] += acc[m - max(1, m - 1)]
            # x == m + 1 (only reachable from w == m) sets a fresh maximum
            fresh = new.setdefault((m + 1, True), [0] * (m + 1))
            fresh[m] += column[m - 1]
        columns = {key: col for key, col in new.items() if any(col)}
        u = sum(sum(col) for (m, q), col in columns.items() if q)
        v = sum(sum(col) for (m, q), col in columns.items() if not q)
        yield _make_row(_length, u, v)


def census_dp(n: int, *, cap: int = DP_CAP) -> CensusRow:
    """The exact row for a single n via the dynamic program.

    >>> census_dp(3) == census_enumerative(3)
    True
    """
    for row in census_rows_dp(n, cap=cap):
        if row.n == n:
            return row
    raise AssertionError("unreachable")


def ulis_count_all(n: int, *, cap: int = ALL_PERMUTATION_CAP) -> int:
    """Number of ALL permutations of length n with a unique longest
    increasing subsequence, by brute force over n! permutations.

    The subsequence-count bookkeeping saturates at 2, since only the
    distinction "exactly one" versus "more" matters here.

    >>> [ulis_count_all(n) for n in range(1, 5)]
    [1, 1, 3, 10]
    """
    if n < 0:
        raise InputError(f"length must be nonnegative, got {n}")
    if n > cap:
        raise InputError(
            f"all-permutation scan capped at n = {cap} (requested {n}); "
            f"pass a higher cap to override"
        )
    if n == 0:
        return 1
    total = 0
    lengths = [0] * n
    counts = [0] * n
    for p in itertools.permutations(range(n)):
        for i in range(n - 1, -1, -1):
            pi = p[i]
            best = 0
            c = 1
            for j in range(i + 1, n):
                if p[j] > pi:
                    lj = lengths[j]
                    if lj > best:
                        best = lj
                        c = counts[j]
                    elif lj == best:
                        c += counts[j]
            lengths[i] = best + 1
            counts[i] = c if c < 2 else 2
        longest = max(lengths)
        tally = 0
        for l, c in zip(lengths, counts):
            if l == longest:
                tally += c
                if tally > 1:
                    break
        if tally == 1:
            total += 1
    return total
