"""Unique-maximum classification of rank sequences and the two injections.

A 132-avoider has a unique longest increasing subsequence exactly when its
rank sequence attains its maximum at a single position.  On rank sequences
whose maximum is tied, `uniquify_max` bumps the stretch between the last two
maximum positions up by one, producing a sequence whose (new) maximum is
unique; it never collides on distinct inputs.  Conjugating by the rank
bijection gives `uniquify_lis`, an injection from avoiders without a unique
longest increasing subsequence to avoiders with one -- which is what pins the
count of the former below the count of the latter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, InputError
from .permutations import PATTERN_132, Permutation, contains_pattern, has_ulis
from .ranks import RankSequence, invert, rank_sequence


@dataclass(frozen=True)
class MaxProfile:
    """Where a rank sequence attains its maximum.

    `top` is the maximal value, `occurrences` the ascending 1-based positions
    holding it, and `unique` whether there is exactly one.
    """

    top: int
    occurrences: tuple[int, ...]
    unique: bool

    def __post_init__(self):
        assert self.occurrences
        assert self.unique == (len(self.occurrences) == 1)


def max_profile(t: RankSequence) -> MaxProfile:
    """Classify `t` by the multiplicity of its maximum.

    >>> max_profile(RankSequence.from_text("221"))
    MaxProfile(top=2, occurrences=(1, 2), unique=False)
    >>> max_profile(RankSequence.from_text("321")).unique
    True
    """
    top = max(t.values)
    occurrences = tuple(i + 1 for i, v in enumerate(t.values) if v == top)
    return MaxProfile(top, occurrences, len(occurrences) == 1)


def uniquify_max(t: RankSequence) -> RankSequence:
    """Make the maximum of a tied-maximum rank sequence unique.

    With i < j the final two positions holding the maximum, every value on
    [i, j) is incremented by one.  Only position i held the maximum there, so
    the result has a unique maximum, one higher, at position i; entries at and
    beyond j are untouched.  Distinct inputs give distinct outputs, since the
    image determines i, j, and hence the original sequence.

    A sequence whose maximum is already unique is rejected: accepting it
    silently would hide classification bugs in callers.

    >>> str(uniquify_max(RankSequence.from_text("221")))
    '3 2 1'
    >>> str(uniquify_max(RankSequence.from_text("2221")))
    '2 3 2 1'
    """
    profile = max_profile(t)
    if profile.unique:
        raise InputError(
            f"sequence already has a unique maximum: {t}"
        )
    i, j = profile.occurrences[-2], profile.occurrences[-1]
    bumped = tuple(
        v + 1 if i <= pos < j else v
        for pos, v in enumerate(t.values, start=1)
    )
    result = RankSequence(bumped)  # revalidates family membership
    check = max_profile(result)
    if not (check.unique and check.top == profile.top + 1
            and check.occurrences == (i,)):
        raise ConstructionError(
            f"image of {t} lacks the promised unique maximum: {result}"
        )
    return result


def uniquify_lis(p: Permutation) -> Permutation:
    """Carry a 132-avoider without a unique longest increasing subsequence to
    one with a unique longest increasing subsequence.

    Conjugation of `uniquify_max` by the rank bijection: take ranks, make the
    maximum unique, reconstruct.  Preconditions are recomputed here rather
    than trusted, which is cheap at the scales this library targets.

    >>> print(uniquify_lis(Permutation.from_text("213")))
    1 2 3
    >>> print(uniquify_lis(Permutation.from_text("321")))
    3 1 2
    """
    verdict = contains_pattern(p, PATTERN_132)
    if verdict.contains:
        raise InputError(
            f"input contains 132 at positions {verdict.witness}: {p}"
        )
    if has_ulis(p):
        raise InputError(f"input already has a unique longest increasing subsequence: {p}")
    return invert(uniquify_max(rank_sequence(p)))
