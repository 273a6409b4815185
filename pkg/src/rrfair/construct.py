"""Deterministic generators for schedules and single-break pattern sets.

Covers the explicit ranking-fair construction for team counts divisible by
four, the canonical single-break pattern set (break gaps 2,2,...,2,1) with a
circle-method schedule realizing it, the known ranking-fair schedule on that
pattern set for eight teams, expansion of a gap sequence into a pattern set,
and the gap-sequence family that admits ranking-fair schedules for team
counts of the form 4k + 2 starting at 18.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AWAY,
    DSequence,
    HOME,
    HapSet,
    HomeAwayPattern,
    Schedule,
    expected_venue,
    single_break_pattern,
    verify_feasible,
)


def pi(i: int, j: int, n: int) -> int:
    """Round index 1 + ((n + 1 - i - j) mod (n - 1)).

    For fixed i this walks the rounds n-1, n-2, ..., 1 cyclically as j
    increases, which is what makes each generated row a permutation.
    """
    return 1 + (n + 1 - i - j) % (n - 1)


@dataclass(frozen=True)
class ConstructionTrace:
    """Intermediate artifacts of the multiple-of-four construction.

    ``round_table[(i, j)]`` is the round of the i-j match (symmetric),
    ``home[(i, j)]`` the home team of the unordered pair (i < j), and
    ``break_rounds`` the rounds where breaks are expected: 1, then the
    consecutive pairs 3,4 / 7,8 / ... / n-5,n-4, then n-1.
    """

    n: int
    round_table: dict[tuple[int, int], int]
    home: dict[tuple[int, int], int]
    break_rounds: tuple[int, ...]


def _set_cell(table: dict[tuple[int, int], int], i: int, j: int, r: int) -> None:
    if (i, j) in table and table[(i, j)] != r:
        raise RuntimeError(
            f"round table cell ({i},{j}) written twice: "
            f"{table[(i, j)]} then {r}"
        )
    table[(i, j)] = r


def construct_4k_trace(n: int) -> ConstructionTrace:
    """Round table, venues, and expected break rounds for n = 4k teams."""
    if n < 4 or n % 4:
        raise ValueError(f"construction requires n = 0 (mod 4), n >= 4; got {n}")
    upper: dict[tuple[int, int], int] = {}
    half = n // 2
    for i in range(1, half + 1, 2):
        for j in range(i + 1, n):
            _set_cell(upper, i, j, pi(i, j, n))
        _set_cell(upper, i, n, pi(i, i, n))
    for i in range(half + 1, n - 2, 2):
        for j in range(i + 2, n):
            _set_cell(upper, i, j, pi(i, j, n))
        _set_cell(upper, i, i + 1, pi(i, i, n))
        _set_cell(upper, i, n, pi(i, i + 1, n))
    _set_cell(upper, n - 1, n, 3)
    for i in range(2, n + 1, 2):
        for j in range(i + 1, n + 1):
            source = (i - 1, j + 1) if j % 2 else (i - 1, j - 1)
            if source not in upper:
                raise RuntimeError(
                    f"even-row rule needs undefined cell {source} for ({i},{j})"
                )
            _set_cell(upper, i, j, upper[source])
    table: dict[tuple[int, int], int] = {}
    home: dict[tuple[int, int], int] = {}
    for (i, j), r in upper.items():
        table[(i, j)] = r
        table[(j, i)] = r
        home[(i, j)] = i if expected_venue(i, j) == HOME else j
    claimed = {1, n - 1}
    for r in range(3, n - 3, 4):
        claimed.update((r, r + 1))
    return ConstructionTrace(n, table, home, tuple(sorted(claimed)))


def _schedule_from_trace(trace: ConstructionTrace) -> Schedule:
    matches = []
    for (i, j), home_team in trace.home.items():
        away_team = j if home_team == i else i
        matches.append((trace.round_table[(i, j)], home_team, away_team))
    schedule = Schedule.from_matches(trace.n, matches)
    violations = verify_feasible(schedule)
    if violations:
        raise RuntimeError(
            f"generated schedule is infeasible: {violations[:3]}"
        )
    return schedule


def construct_4k(n: int) -> Schedule:
    """Ranking-fair, single-break schedule for any n divisible by four.

    Odd rows of the round table walk the rounds cyclically (with dedicated
    slots for the matches against team n and, past the halfway row, team
    i + 1); each even row copies the row above with adjacent columns
    swapped; the last cell is pinned to round 3; venues follow the parity
    rule with team 1 hosting team 2.
    """
    return _schedule_from_trace(construct_4k_trace(n))


def hapset_from_dseq(d: DSequence, n: int) -> HapSet:
    """Expand a gap sequence into the single-break pattern set it encodes.

    Break rounds start at round 1 and advance by the gaps; each break round
    contributes the home-break pattern breaking there and its complement.
    """
    if n < 4 or n % 2:
        raise ValueError(f"team count must be even and >= 4, got {n}")
    if len(d.gaps) != n // 2:
        raise ValueError(
            f"need {n // 2} gaps for {n} teams, got {len(d.gaps)}"
        )
    if sum(d.gaps) != n - 1:
        raise ValueError(
            f"gaps sum to {sum(d.gaps)}, expected {n - 1}"
        )
    rounds = [1]
    for g in d.gaps[:-1]:
        rounds.append(rounds[-1] + g)
    patterns = [single_break_pattern(n, r, HOME) for r in rounds]
    patterns += [single_break_pattern(n, r, AWAY) for r in rounds]
    if len(set(patterns)) != len(patterns):
        raise ValueError(f"gap sequence {d} expands to duplicate patterns")
    return HapSet(tuple(patterns))


def cps_hapset(n: int) -> HapSet:
    """Canonical single-break pattern set: break gaps (2, 2, ..., 2, 1).

    Breaks land on the odd rounds 1, 3, ..., n - 1, the placement
    underlying standard round robin tables.
    """
    if n < 4 or n % 2:
        raise ValueError(f"team count must be even and >= 4, got {n}")
    return hapset_from_dseq(DSequence((2,) * (n // 2 - 1) + (1,)), n)


def circle_schedule(n: int) -> Schedule:
    """Feasible single-break schedule realizing cps_hapset(n).

    Standard circle method: teams i and n + 1 - i meet in round 1; team n
    stays put while the others rotate, so teams i, j < n meet in round
    (i + j - 2) mod (n - 1) + 1 and team i meets team n in round
    (2i - 2) mod (n - 1) + 1.  Venues: between rotating teams the higher
    index hosts exactly when the index gap is odd; team n hosts in even
    rounds.
    """
    if n < 4 or n % 2:
        raise ValueError(f"team count must be even and >= 4, got {n}")
    matches = []
    for i in range(1, n):
        for j in range(i + 1, n):
            r = (i + j - 2) % (n - 1) + 1
            home, away = (j, i) if (j - i) % 2 else (i, j)
            matches.append((r, home, away))
        r = (2 * i - 2) % (n - 1) + 1
        home, away = (n, i) if r % 2 == 0 else (i, n)
        matches.append((r, home, away))
    schedule = Schedule.from_matches(n, matches)
    violations = verify_feasible(schedule)
    if violations:
        raise RuntimeError(f"circle schedule infeasible: {violations[:3]}")
    return schedule


_RANKING_FAIR_8_ROUNDS = (
    ((5, 1), (2, 3), (8, 4), (6, 7)),
    ((1, 6), (4, 2), (3, 8), (7, 5)),
    ((1, 8), (2, 7), (5, 3), (6, 4)),
    ((7, 1), (8, 2), (3, 6), (4, 5)),
    ((1, 4), (6, 2), (7, 3), (5, 8)),
    ((3, 1), (2, 5), (4, 7), (8, 6)),
    ((1, 2), (3, 4), (5, 6), (7, 8)),
)


def cps_rankingfair_8() -> Schedule:
    """The known ranking-fair schedule on the canonical pattern set, n = 8.

    Eight teams is the largest count for which that pattern set admits a
    ranking-fair schedule; this is the fixed witness (home team first).
    """
    return Schedule(8, _RANKING_FAIR_8_ROUNDS)


def family_dseq_4k2(n: int) -> DSequence:
    """Gap sequence 2,2,1,2,(3,1)^i,2,(1,3)^j for n = 4k + 2 teams, n >= 18.

    With i = ceil((n/2 - 5) / 4) and j = floor((n/2 - 5) / 4) the gaps sum
    to n - 1; these sets admit single-break ranking-fair schedules, unlike
    every single-break set for n in {6, 10, 14}.
    """
    if n % 4 != 2:
        raise ValueError(f"family requires n = 2 (mod 4), got {n}")
    if n < 18:
        raise ValueError(
            f"family starts at n = 18 (no single-break ranking-fair "
            f"schedules exist for n in {{6, 10, 14}}); got {n}"
        )
    quarter, rem = divmod(n // 2 - 5, 4)
    i = quarter + (1 if rem else 0)
    j = quarter
    gaps = (2, 2, 1, 2) + (3, 1) * i + (2,) + (1, 3) * j
    seq = DSequence(gaps)
    assert sum(gaps) == n - 1 and len(gaps) == n // 2
    return seq
