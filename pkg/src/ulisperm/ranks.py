"""Rank sequences: the Catalan family in bijection with 132-avoiders.

The rank sequence of a permutation records, position by position, the length
of the longest increasing subsequence starting there.  For 132-avoiding
permutations the resulting sequences are exactly the positive-integer
sequences that end in 1 and never drop by more than 1 between neighbours;
this module owns that family (membership validation, exhaustive generation,
exact counting) and the inverse map reconstructing the unique 132-avoider
from its rank sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ConstructionError, InputError, SequenceValidationError
from .permutations import (
    Permutation,
    enumerate_avoiders,
    format_values,
    parse_values,
    start_ranks,
)

# Exhaustive generation visits catalan(n) sequences (catalan(12) = 208012).
SEQUENCE_CAP = 12


@dataclass(frozen=True)
class RankSequence:
    """A member of the rank-sequence family: positive integers, final value 1,
    adjacent drops at most 1.

    >>> RankSequence((2, 2, 1)).n
    3
    >>> RankSequence((1, 3, 1))
    Traceback (most recent call last):
        ...
    ulisperm.errors.SequenceValidationError: drop of 2 at positions 2->3
    """

    values: tuple[int, ...]

    def __post_init__(self):
        validate_values(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_text(cls, text: str) -> "RankSequence":
        return cls(parse_values(text))

    def __str__(self) -> str:
        return format_values(self.values)

    def __len__(self) -> int:
        return len(self.values)


def validate_values(values: tuple[int, ...]) -> None:
    """Raise SequenceValidationError naming the violated condition and its
    1-based position; return silently on members of the family."""
    n = len(values)
    if n == 0:
        raise SequenceValidationError("empty", 0, "rank sequence must be nonempty")
    for i, v in enumerate(values):
        if v < 1:
            raise SequenceValidationError(
                "positive", i + 1, f"entry {v} at position {i + 1} is not positive"
            )
    if values[-1] != 1:
        raise SequenceValidationError(
            "final-entry", n, f"must end in 1, ends in {values[-1]}"
        )
    for i in range(n - 1):
        drop = values[i] - values[i + 1]
        if drop > 1:
            raise SequenceValidationError(
                "adjacent-drop", i + 1,
                f"drop of {drop} at positions {i + 1}->{i + 2}"
            )
    # Implied bound: reaching the final 1 by unit drops forces
    # values[i] <= n - i.  Guaranteed by the checks above.
    assert all(v <= n - i for i, v in enumerate(values))


def validate(values) -> RankSequence:
    """Validate an integer sequence as a member of the family.

    >>> validate([2, 2, 1]).values
    (2, 2, 1)
    """
    return RankSequence(tuple(values))


def rank_sequence(p: Permutation) -> RankSequence:
    """The rank sequence of `p`.

    Ranks themselves are defined for every permutation (see
    `permutations.start_ranks`); the wrapped family member is guaranteed to
    exist when `p` avoids 132, and for some inputs containing 132 the raw
    ranks fall outside the family, in which case this raises.

    >>> rank_sequence(Permutation.from_text("213")).values
    (2, 2, 1)
    """
    return RankSequence(start_ranks(p))


def catalan(n: int) -> int:
    """The n-th Catalan number, by integer-only evaluation.

    binom(2n, n)/(n+1) rewritten as a difference of binomials so that no
    intermediate division occurs.

    >>> [catalan(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise InputError(f"catalan is defined for n >= 0, got {n}")
    return math.comb(2 * n, n) - math.comb(2 * n, n + 1)


def enumerate_rank_sequences(n: int, *, cap: int = SEQUENCE_CAP) -> Iterator[RankSequence]:
    """Yield every rank sequence of length n exactly once, in lexicographic
    order.  There are catalan(n) of them.

    Generated left to right: after a value v the next position may hold
    anything from max(1, v - 1) up to the slack bound n - i, which is exactly
    what reaching the final 1 by drops of at most 1 permits.

    >>> [str(t) for t in enumerate_rank_sequences(3)]
    ['1 1 1', '1 2 1', '2 1 1', '2 2 1', '3 2 1']
    """
    if n < 1:
        raise InputError(f"rank sequences have length >= 1, got {n}")
    if n > cap:
        raise InputError(
            f"rank-sequence enumeration capped at n = {cap} (requested {n}); "
            f"pass a higher cap to override"
        )
    return _generate_sequences(n)


def _generate_sequences(n: int) -> Iterator[RankSequence]:
    prefix = [0] * n

    def extend(i: int) -> Iterator[RankSequence]:
        if i == n:
            yield RankSequence(tuple(prefix))
            return
        low = max(1, prefix[i - 1] - 1) if i else 1
        for v in range(low, n - i + 1):
            prefix[i] = v
            yield from extend(i + 1)

    yield from extend(0)


def invert(t: RankSequence) -> Permutation:
    """The unique 132-avoiding permutation whose rank sequence is `t`.

    Values are placed in decreasing order, n first.  At the moment value v is
    placed, the filled positions hold exactly the values above v, so the rank
    demanded at v's position must equal one more than the highest rank among
    filled positions to its right (or 1 if there are none).  At each step the
    leftmost free position satisfying that equation is the only choice that
    extends to a 132-avoider, so the whole construction is forced:

    >>> print(invert(RankSequence.from_text("121")))
    3 1 2
    >>> print(invert(RankSequence.from_text("221")))
    2 1 3

    Raises ConstructionError if no position satisfies the equation, which no
    valid rank sequence can trigger.
    """
    values = t.values
    n = len(values)
    entries = [0] * n
    # best_right[s] = highest rank among already-filled positions right of s
    best_right = [0] * n
    for v in range(n, 0, -1):
        target = -1
        for s in range(n):
            if not entries[s] and values[s] == best_right[s] + 1:
                target = s
                break
        if target < 0:
            raise ConstructionError(
                f"no admissible position for value {v} inverting {t}"
            )
        entries[target] = v
        k = values[target]
        for s in range(target):
            if best_right[s] < k:
                best_right[s] = k
    result = Permutation(tuple(entries))
    assert start_ranks(result) == values, (t, result)
    return result


def invert_by_search(t: RankSequence, *, cap: int = SEQUENCE_CAP) -> Permutation:
    """Reference inverse: exhaustive search over all 132-avoiders.

    Exponentially slower than `invert` and independent of it; exists so test
    suites can check the direct construction against ground truth.
    """
    matches = [
        p for p in enumerate_avoiders(t.n, cap=cap)
        if start_ranks(p) == t.values
    ]
    if len(matches) != 1:
        raise ConstructionError(
            f"expected exactly one 132-avoiding preimage of {t}, found {len(matches)}"
        )
    return matches[0]
