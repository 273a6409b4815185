"""Brute-force references used to cross-check the main implementations.

Everything here is written for literalness, not speed: schedules for four
or six teams are enumerated outright, the imbalance measure recounts every
interval from scratch, and canonicalization materializes every rotation.
No code is shared with the primary implementations beyond the domain types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import (
    AWAY,
    DSequence,
    HOME,
    HapSet,
    HomeAwayPattern,
    Schedule,
    breaks,
    expected_venue,
    extract_haps,
)


@dataclass(frozen=True)
class EnumerationScope:
    """What to enumerate: team count plus optional filters.

    Filters are conjunctive.  ``hapset`` keeps only schedules whose
    extracted pattern set equals the given one (as a set, ignoring which
    team carries which pattern).
    """

    n: int
    single_break: bool = False
    ranking_fair: bool = False
    hapset: HapSet | None = None

    def __post_init__(self) -> None:
        if self.n not in (4, 6):
            raise ValueError(
                f"full enumeration is only tractable for n in {{4, 6}}, "
                f"got {self.n}"
            )


def _round_matchings(n: int, used_pairs: set[tuple[int, int]]):
    """All perfect matchings of 1..n avoiding used pairs, smallest team
    first so each matching is produced exactly once."""

    def extend(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for partner in remaining[1:]:
            if (first, partner) in used_pairs:
                continue
            rest = tuple(t for t in remaining[1:] if t != partner)
            for tail in extend(rest):
                yield ((first, partner),) + tail

    yield from extend(tuple(range(1, n + 1)))


def _factorizations(n: int) -> Iterator[tuple[tuple[tuple[int, int], ...], ...]]:
    """Every round-labeled 1-factorization of the complete graph on 1..n."""
    used: set[tuple[int, int]] = set()
    rounds: list[tuple[tuple[int, int], ...]] = []

    def extend() -> Iterator[tuple[tuple[tuple[int, int], ...], ...]]:
        if len(rounds) == n - 1:
            yield tuple(rounds)
            return
        for matching in _round_matchings(n, used):
            used.update(matching)
            rounds.append(matching)
            yield from extend()
            rounds.pop()
            used.difference_update(matching)

    yield from extend()


def _single_break_pool(n: int) -> list[HomeAwayPattern]:
    pool = []
    for venues in itertools.product((HOME, AWAY), repeat=n - 1):
        pattern = HomeAwayPattern("".join(venues))
        if len(breaks(pattern)) == 1:
            pool.append(pattern)
    return pool


def _oriented(factorization, assignment: dict[int, HomeAwayPattern], n: int) -> Schedule:
    rounds = []
    for r, matching in enumerate(factorization, start=1):
        played = []
        for i, j in matching:
            played.append((i, j) if assignment[i].venue(r) == HOME else (j, i))
        rounds.append(tuple(played))
    return Schedule(n, tuple(rounds))


def _pattern_assignments(
    factorization, pool: list[HomeAwayPattern], n: int
) -> Iterator[dict[int, HomeAwayPattern]]:
    """Assignments of pool patterns to teams consistent with the pairings.

    Consistency means the two patterns of every match disagree at its
    round; the match venue is then forced.  Two teams can never share a
    pattern (they could not play each other), so assignments from an
    n-pattern pool are automatically bijections.
    """
    round_of: dict[tuple[int, int], int] = {}
    for r, matching in enumerate(factorization, start=1):
        for i, j in matching:
            round_of[(i, j)] = r
            round_of[(j, i)] = r
    assignment: dict[int, HomeAwayPattern] = {}

    def extend(team: int) -> Iterator[dict[int, HomeAwayPattern]]:
        if team > n:
            yield dict(assignment)
            return
        for pattern in pool:
            ok = True
            for other in range(1, team):
                r = round_of[(team, other)]
                if assignment[other].venue(r) == pattern.venue(r):
                    ok = False
                    break
            if ok:
                assignment[team] = pattern
                yield from extend(team + 1)
                del assignment[team]

    yield from extend(1)


def enumerate_schedules(scope: EnumerationScope) -> Iterator[Schedule]:
    """Yield every feasible schedule (each venue orientation once) passing
    the scope's filters.

    Filters are pushed into the enumeration: the ranking-fair filter fixes
    all venues up to one global flip, so only two orientations per
    pairing table are visited; the single-break and pattern-set filters
    enumerate pattern assignments instead of raw orientations.
    """
    n = scope.n
    wants_patterns = scope.single_break or scope.hapset is not None
    for factorization in _factorizations(n):
        if scope.ranking_fair:
            base = []
            for matching in factorization:
                base.append(
                    tuple(
                        (i, j) if expected_venue(i, j) == HOME else (j, i)
                        for i, j in matching
                    )
                )
            for flip in (False, True):
                schedule = Schedule(n, tuple(base))
                if flip:
                    schedule = schedule.flipped()
                if _passes(schedule, scope):
                    yield schedule
        elif wants_patterns:
            pool = (
                list(scope.hapset.patterns)
                if scope.hapset is not None
                else _single_break_pool(n)
            )
            for assignment in _pattern_assignments(factorization, pool, n):
                schedule = _oriented(factorization, assignment, n)
                if _passes(schedule, scope):
                    yield schedule
        else:
            match_list = [m for matching in factorization for m in matching]
            for flips in itertools.product((False, True), repeat=len(match_list)):
                rounds = []
                idx = 0
                for matching in factorization:
                    played = []
                    for i, j in matching:
                        played.append((j, i) if flips[idx] else (i, j))
                        idx += 1
                    rounds.append(tuple(played))
                yield Schedule(n, tuple(rounds))


def _passes(schedule: Schedule, scope: EnumerationScope) -> bool:
    if scope.single_break:
        haps = extract_haps(schedule)
        if any(len(breaks(p)) != 1 for p in haps.patterns):
            return False
    if scope.hapset is not None:
        if set(extract_haps(schedule).patterns) != set(scope.hapset.patterns):
            return False
    return True


def naive_delta(row: str) -> Fraction:
    """Interval imbalance by literal recount of every interval."""
    if len(row) < 2:
        raise ValueError(f"venue vector too short: length {len(row)} < 2")
    if set(row) - {HOME, AWAY}:
        raise ValueError(f"venue symbols must be H or A: {row!r}")
    total = Fraction(0)
    m = len(row)
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            homes = sum(1 for s in row[i - 1 : j] if s == HOME)
            ideal = Fraction(j - i + 1, 2)
            total += abs(Fraction(homes) - ideal)
    return total


def naive_canonical(d: DSequence) -> DSequence:
    """Canonical form by materializing every rotation of d and reversed d."""
    candidates = []
    for seq in (list(d.gaps), list(reversed(d.gaps))):
        for shift in range(len(seq)):
            candidates.append(tuple(seq[shift:] + seq[:shift]))
    return DSequence(max(candidates))
