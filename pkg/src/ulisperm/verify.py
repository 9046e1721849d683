"""Exhaustive verification suites.

Every suite sweeps all objects of each length up to a bound and checks one
of the structural facts the library rests on, reporting either a pass with
summary counts or the first counterexample found (objects are visited in
lexicographic order, so the reported counterexample is the least one).  The
suites exist so the mathematical claims stay claims about *this code*, not
about intentions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .census import census_enumerative, ulis_count_all
from .errors import InputError
from .oeis import FIXTURE_ID, fixture_text, parse_bfile
from .permutations import (
    ALL_PERMUTATION_CAP,
    AVOIDER_CAP,
    PATTERN_132,
    contains_pattern,
    enumerate_avoiders,
    has_ulis,
    start_lengths_counts,
)
from .ranks import SEQUENCE_CAP, catalan, enumerate_rank_sequences, invert, rank_sequence
from .ulis import max_profile, uniquify_lis, uniquify_max


@dataclass
class RunReport:
    """One verification (or census) run: what ran, with which parameters,
    and how it came out.  Durations live outside the deterministic payload so
    identical runs stay byte-identical on standard output."""

    command: str
    parameters: dict[str, Any]
    outcome: dict[str, Any]
    duration_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.outcome.get("status") == "pass"

    def to_payload(self, *, include_duration: bool = False) -> dict[str, Any]:
        payload = {
            "command": self.command,
            "parameters": self.parameters,
            "outcome": self.outcome,
        }
        if include_duration:
            payload["duration_ms"] = self.duration_ms
        return payload


def _fail(counterexample: dict[str, Any], **stats: Any) -> dict[str, Any]:
    return {"status": "fail", "counterexample": counterexample, **stats}


def _pass(**stats: Any) -> dict[str, Any]:
    return {"status": "pass", **stats}


def _suite_bijection(max_n: int) -> dict[str, Any]:
    """Both round trips of the rank map are identities."""
    trips = 0
    for n in range(1, max_n + 1):
        for p in enumerate_avoiders(n):
            t = rank_sequence(p)
            back = invert(t)
            trips += 1
            if back != p:
                return _fail(
                    {"n": n, "permutation": str(p), "rank_sequence": str(t),
                     "reconstructed": str(back)},
                    round_trips=trips,
                )
        for t in enumerate_rank_sequences(n):
            p = invert(t)
            trips += 1
            if rank_sequence(p) != t:
                return _fail(
                    {"n": n, "sequence": str(t), "permutation": str(p),
                     "ranks": str(rank_sequence(p))},
                    round_trips=trips,
                )
            bad = contains_pattern(p, PATTERN_132)
            if bad.contains:
                return _fail(
                    {"n": n, "sequence": str(t), "permutation": str(p),
                     "pattern_at": bad.witness},
                    round_trips=trips,
                )
    return _pass(round_trips=trips)


def _suite_lemma1(max_n: int) -> dict[str, Any]:
    """Every entry of every 132-avoider starts exactly one maximal
    increasing subsequence."""
    permutations = 0
    entries = 0
    for n in range(1, max_n + 1):
        for p in enumerate_avoiders(n):
            permutations += 1
            _, counts = start_lengths_counts(p)
            entries += n
            for position, count in enumerate(counts, start=1):
                if count != 1:
                    return _fail(
                        {"n": n, "permutation": str(p), "position": position,
                         "count": count},
                        permutations=permutations,
                    )
    return _pass(permutations=permutations, entries=entries)


def _suite_injection_f(max_n: int) -> dict[str, Any]:
    """The tied-maximum bump is injective, and its images are valid
    sequences with a unique maximum (checked inside uniquify_max)."""
    inputs = 0
    for n in range(1, max_n + 1):
        seen: dict[tuple[int, ...], str] = {}
        for t in enumerate_rank_sequences(n):
            if max_profile(t).unique:
                continue
            inputs += 1
            image = uniquify_max(t)
            if image.values in seen:
                return _fail(
                    {"n": n, "first": seen[image.values], "second": str(t),
                     "image": str(image)},
                    inputs=inputs,
                )
            seen[image.values] = str(t)
    return _pass(inputs=inputs, distinct_images=inputs)


def _suite_injection_g(max_n: int) -> dict[str, Any]:
    """The composed map on avoiders lands in the unique-subsequence class
    injectively."""
    domain = 0
    for n in range(1, max_n + 1):
        seen: dict[tuple[int, ...], str] = {}
        for p in enumerate_avoiders(n):
            if has_ulis(p):
                continue
            domain += 1
            image = uniquify_lis(p)
            if not has_ulis(image):
                return _fail(
                    {"n": n, "permutation": str(p), "image": str(image),
                     "reason": "image lacks a unique longest increasing subsequence"},
                    domain=domain,
                )
            bad = contains_pattern(image, PATTERN_132)
            if bad.contains:
                return _fail(
                    {"n": n, "permutation": str(p), "image": str(image),
                     "pattern_at": bad.witness},
                    domain=domain,
                )
            if image.entries in seen:
                return _fail(
                    {"n": n, "first": seen[image.entries], "second": str(p),
                     "image": str(image)},
                    domain=domain,
                )
            seen[image.entries] = str(p)
    return _pass(domain=domain, distinct_images=domain)


def _suite_characterization(max_n: int) -> dict[str, Any]:
    """A 132-avoider has a unique longest increasing subsequence exactly when
    its rank sequence has a unique maximum; the two resulting counts agree
    with the enumerative census."""
    permutations = 0
    for n in range(1, max_n + 1):
        with_unique = 0
        for p in enumerate_avoiders(n):
            permutations += 1
            direct = has_ulis(p)
            via_ranks = max_profile(rank_sequence(p)).unique
            if direct != via_ranks:
                return _fail(
                    {"n": n, "permutation": str(p), "has_ulis": direct,
                     "unique_max": via_ranks},
                    permutations=permutations,
                )
            with_unique += direct
        row = census_enumerative(n)
        if with_unique != row.u:
            return _fail(
                {"n": n, "avoider_count": with_unique, "census_u": row.u},
                permutations=permutations,
            )
    return _pass(permutations=permutations)


def _suite_catalan(max_n: int) -> dict[str, Any]:
    """Avoiders and rank sequences are both counted by the Catalan numbers."""
    checked = []
    for n in range(1, max_n + 1):
        expected = catalan(n)
        avoiders = sum(1 for _ in enumerate_avoiders(n))
        if avoiders != expected:
            return _fail({"n": n, "avoiders": avoiders, "catalan": expected})
        sequences = sum(1 for _ in enumerate_rank_sequences(n))
        if sequences != expected:
            return _fail({"n": n, "sequences": sequences, "catalan": expected})
        checked.append(expected)
    return _pass(lengths=max_n, counts=checked)


def _suite_oeis(max_n: int) -> dict[str, Any]:
    """Brute-force unique-subsequence counts match the bundled A167995 data."""
    table = {entry.index: entry.value for entry in parse_bfile(fixture_text())}
    compared = 0
    for n in range(1, max_n + 1):
        if n not in table:
            return _fail({"n": n, "reason": f"missing from bundled {FIXTURE_ID}"})
        computed = ulis_count_all(n)
        if computed != table[n]:
            return _fail(
                {"n": n, "computed": computed, "fixture": table[n]},
                compared=compared,
            )
        compared += 1
    return _pass(compared=compared)


_SUITES: dict[str, tuple[Callable[[int], dict[str, Any]], int, int]] = {
    # name: (runner, default max_n, hard cap)
    "bijection": (_suite_bijection, 10, min(AVOIDER_CAP, SEQUENCE_CAP)),
    "lemma1": (_suite_lemma1, 9, AVOIDER_CAP),
    "injection-f": (_suite_injection_f, 12, SEQUENCE_CAP),
    "injection-g": (_suite_injection_g, 10, AVOIDER_CAP),
    "characterization": (_suite_characterization, 10, AVOIDER_CAP),
    "catalan": (_suite_catalan, 10, min(AVOIDER_CAP, SEQUENCE_CAP)),
    "oeis": (_suite_oeis, 9, ALL_PERMUTATION_CAP),
}

SUITE_NAMES = tuple(_SUITES)


def suite_default_max_n(suite: str) -> int:
    return _SUITES[suite][1]


def run_suite(suite: str, max_n: int | None = None) -> RunReport:
    """Run one named suite up to `max_n` (its default bound if omitted)."""
    if suite not in _SUITES:
        raise InputError(
            f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    runner, default_max, cap = _SUITES[suite]
    bound = default_max if max_n is None else max_n
    if bound < 1:
        raise InputError(f"max_n must be at least 1, got {bound}")
    if bound > cap:
        raise InputError(f"suite {suite} is capped at max_n = {cap} (requested {bound})")
    started = time.perf_counter()
    outcome = runner(bound)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return RunReport(
        command="verify",
        parameters={"suite": suite, "max_n": bound},
        outcome=outcome,
        duration_ms=elapsed_ms,
    )
