"""Permutations, pattern containment, and increasing-subsequence machinery.

Conventions used throughout the package:

- A permutation of length n is a rearrangement of the values 1..n, held as a
  tuple of ints.  Positions are 1-based in every public interface (matching
  the usual combinatorial convention); internal loops are 0-based.
- An increasing subsequence picks entries at strictly increasing positions
  with strictly increasing values.  Two subsequences are the same only if
  they occupy the same set of positions; since a permutation has no repeated
  values, this coincides with comparing value sets.
- The text form of a permutation is space-separated values on one line, e.g.
  "3 4 2 5 6 1 7 8".  For lengths up to 9 the compact digit form "34256178"
  is accepted on input.

All counting here is exact: subsequence counts grow exponentially and are
kept as Python ints, never floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InputError

# Default enumeration ceilings.  Avoider enumeration visits C_n objects
# (C_12 = 208012); scans over all n! permutations stop earlier.  Both are
# overridable per call; the CLI exposes them as flags.
AVOIDER_CAP = 12
ALL_PERMUTATION_CAP = 10


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 1, 3)).n
    3
    >>> print(Permutation.from_text("34256178"))
    3 4 2 5 6 1 7 8
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if sorted(self.entries) != list(range(1, n + 1)):
            raise InputError(
                f"not a permutation of 1..{n}: {self.entries}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(parse_values(text))

    def __str__(self) -> str:
        return format_values(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PatternVerdict:
    """Outcome of a containment check.

    When `contains` is true, `witness` holds the lexicographically least
    triple of 1-based positions whose entries are order-isomorphic to the
    pattern.
    """

    contains: bool
    witness: tuple[int, int, int] | None = None


def parse_values(text: str) -> tuple[int, ...]:
    """Parse the one-line text form into a tuple of ints.

    A single token of two or more characters, all digits 1-9, is read as the
    compact digit form (one value per character); anything else is read as
    space-separated integers.

    >>> parse_values("3 4 2 5 6 1 7 8")
    (3, 4, 2, 5, 6, 1, 7, 8)
    >>> parse_values("213")
    (2, 1, 3)
    >>> parse_values("10")
    (10,)
    """
    tokens = text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and all(c in "123456789" for c in tokens[0]):
        return tuple(int(c) for c in tokens[0])
    try:
        return tuple(int(tok) for tok in tokens)
    except ValueError as exc:
        raise InputError(f"not an integer sequence: {text!r}") from exc


def format_values(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def _triple_pattern(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Relative order of three distinct values, as a permutation of 1..3.
    return (
        1 + (a > b) + (a > c),
        1 + (b > a) + (b > c),
        1 + (c > a) + (c > b),
    )


def contains_pattern(p: Permutation, pattern: Permutation) -> PatternVerdict:
    """Decide whether `p` contains the length-3 `pattern`.

    Containment means some positions i < j < k carry entries order-isomorphic
    to the pattern.  The witness returned is the lexicographically least such
    triple.  Cubic scan; permutations here live at desk scale.

    >>> contains_pattern(Permutation.from_text("2413"), PATTERN_132)
    PatternVerdict(contains=True, witness=(1, 2, 4))
    >>> contains_pattern(Permutation.from_text("34256178"), PATTERN_132).contains
    False
    """
    if pattern.n != 3:
        raise InputError(f"pattern must have length 3, got length {pattern.n}")
    sig = pattern.entries
    e = p.entries
    n = len(e)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                if _triple_pattern(e[i], e[j], e[k]) == sig:
                    return PatternVerdict(True, (i + 1, j + 1, k + 1))
    return PatternVerdict(False)


PATTERN_132 = Permutation((1, 3, 2))


def start_lengths_counts(p: Permutation) -> tuple[list[int], list[int]]:
    """Per-position longest-increasing-subsequence data.

    Returns two lists aligned with positions: `lengths[i]` is the length of
    the longest increasing subsequence beginning at position i+1, and
    `counts[i]` is the exact number of position sets realizing it.  Computed
    right to left: a subsequence starting here continues at any later, larger
    entry.  Quadratic, which keeps the count bookkeeping transparent.
    """
    e = p.entries
    n = len(e)
    lengths = [1] * n
    counts = [1] * n
    for i in range(n - 2, -1, -1):
        ei = e[i]
        best = 0
        total = 0
        for j in range(i + 1, n):
            if e[j] > ei:
                lj = lengths[j]
                if lj > best:
                    best = lj
                    total = counts[j]
                elif lj == best:
                    total += counts[j]
        if best:
            lengths[i] = best + 1
            counts[i] = total
    return lengths, counts


def start_ranks(p: Permutation) -> tuple[int, ...]:
    """The rank of each entry: length of the longest increasing subsequence
    starting there.  Defined for every permutation.

    >>> start_ranks(Permutation.from_text("213"))
    (2, 2, 1)
    >>> start_ranks(Permutation.from_text("321"))
    (1, 1, 1)
    """
    lengths, _ = start_lengths_counts(p)
    return tuple(lengths)


def lis_stats(p: Permutation) -> tuple[int, int]:
    """Length of the longest increasing subsequence and the exact number of
    position sets attaining it.  The empty permutation yields (0, 1): the
    empty subsequence is its unique longest one.

    >>> lis_stats(Permutation.from_text("34256178"))
    (6, 1)
    >>> lis_stats(Permutation.from_text("32456178"))
    (6, 2)
    """
    if p.n == 0:
        return 0, 1
    lengths, counts = start_lengths_counts(p)
    longest = max(lengths)
    return longest, sum(c for l, c in zip(lengths, counts) if l == longest)


def has_ulis(p: Permutation) -> bool:
    """True iff exactly one increasing subsequence attains the maximal length.

    >>> has_ulis(Permutation.from_text("34256178"))
    True
    >>> has_ulis(Permutation.from_text("32456178"))
    False
    """
    return lis_stats(p)[1] == 1


def count_maximal_starting_at(p: Permutation, i: int) -> int:
    """Number of position sets realizing a maximum-length increasing
    subsequence that begins at position `i` (1-based).

    Maximality is relative to subsequences starting at `i`, not to the whole
    permutation.  For 132-avoiders this is always 1.
    """
    if not 1 <= i <= p.n:
        raise InputError(f"position {i} out of range 1..{p.n}")
    _, counts = start_lengths_counts(p)
    return counts[i - 1]


# --- enumeration of pattern avoiders -------------------------------------
#
# Lexicographic backtracking.  A prefix is extended one value at a time; a
# candidate value completes the pattern only as its final element (earlier
# completions would have been caught when their own final element was
# appended), and for each length-3 pattern the set of values that would do so
# with some existing pair is a union of contiguous ranges, one range added
# per appended element.  A blocked-value table therefore makes the per
# candidate test O(1).  New range when `u` is appended after a nonempty
# prefix with minimum `lo` and maximum `hi`:
#
#   1 3 2:  (lo, u)          ascent pairs below u, future middle values
#   3 1 2:  (u, hi)          descent pairs above u, future middle values
#   1 2 3:  (u, +inf)        u tops an ascent, larger values complete it
#   3 2 1:  (-inf, u)        u bottoms a descent, smaller values complete it
#   2 1 3:  (above(u), +inf) smallest prefix value above u caps new descents
#   2 3 1:  (-inf, below(u)) largest prefix value below u floors new ascents
#
# All ranges are open intervals of values.


def _block_bounds(sig: tuple[int, int, int], u: int, lo: int, hi: int,
                  used: bytearray, n: int) -> tuple[int, int] | None:
    """Open interval (a, b) of values newly unusable after appending u."""
    if sig == (1, 3, 2):
        return (lo, u) if lo < u else None
    if sig == (3, 1, 2):
        return (u, hi) if hi > u else None
    if sig == (1, 2, 3):
        return (u, n + 1) if lo < u else None
    if sig == (3, 2, 1):
        return (0, u) if hi > u else None
    if sig == (2, 1, 3):
        for w in range(u + 1, n + 1):
            if used[w]:
                return (w, n + 1)
        return None
    # (2, 3, 1)
    for w in range(u - 1, 0, -1):
        if used[w]:
            return (0, w)
    return None


def enumerate_avoiders(n: int, pattern: Permutation = PATTERN_132, *,
                       cap: int = AVOIDER_CAP) -> Iterator[Permutation]:
    """Yield every permutation of length `n` avoiding the length-3 `pattern`,
    exactly once, in lexicographic order of entries.

    There are catalan(n) of them, whichever pattern is chosen.  The default
    cap keeps accidental `n` typos from enumerating millions of objects; pass
    a larger `cap` explicitly to go further.

    >>> [str(p) for p in enumerate_avoiders(3)]
    ['1 2 3', '2 1 3', '2 3 1', '3 1 2', '3 2 1']
    """
    if pattern.n != 3:
        raise InputError(f"pattern must have length 3, got length {pattern.n}")
    if n < 0:
        raise InputError(f"length must be nonnegative, got {n}")
    if n > cap:
        raise InputError(
            f"avoider enumeration capped at n = {cap} (requested {n}); "
            f"pass a higher cap to override"
        )
    return _generate_avoiders(n, pattern.entries)


def _generate_avoiders(n: int, sig: tuple[int, int, int]) -> Iterator[Permutation]:
    if n == 0:
        yield Permutation(())
        return
    used = bytearray(n + 1)
    blocked = bytearray(n + 1)
    out = [0] * n

    def extend(depth: int, lo: int, hi: int) -> Iterator[Permutation]:
        if depth == n:
            yield Permutation(tuple(out))
            return
        for v in range(1, n + 1):
            if used[v] or blocked[v]:
                continue
            used[v] = 1
            out[depth] = v
            newly = []
            if depth:
                bounds = _block_bounds(sig, v, lo, hi, used, n)
                if bounds is not None:
                    for w in range(bounds[0] + 1, bounds[1]):
                        if not blocked[w]:
                            blocked[w] = 1
                            newly.append(w)
            yield from extend(depth + 1, min(lo, v), max(hi, v))
            for w in newly:
                blocked[w] = 0
            used[v] = 0

    yield from extend(0, n + 1, 0)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of length n, lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)
