"""Domain model for single round robin (SRR) tournaments with ranked teams.

Teams are identified by their strength rank 1..n (1 strongest, n weakest,
n even).  A schedule fixes, for every pair of teams, the round in which they
meet and which of the two hosts.  Venues are written "H" (home) and "A"
(away); in sports without venues the same symbols stand for whichever
asymmetry favours one side (white pieces, batting last, ...).

The module also houses the structural verifiers: feasibility, the
ranking-fairness test (each team's venues against opponents sorted by
strength must alternate), break detection on circular home-away patterns,
and the break-gap ("D-sequence") representation of single-break pattern
sets.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

HOME = "H"
AWAY = "A"

_VENUES = frozenset((HOME, AWAY))
_SWAP = str.maketrans("HA", "AH")

# Orientation labels reported by is_ranking_fair.  "standard" is the
# orientation where team 1 hosts team 2; "complement" is its global flip.
ORIENT_STANDARD = "standard"
ORIENT_COMPLEMENT = "complement"


def complement_venues(venues: str) -> str:
    """Swap every H for an A and vice versa."""
    return venues.translate(_SWAP)


def _check_venue_string(venues: str) -> None:
    bad = set(venues) - _VENUES
    if bad:
        raise ValueError(f"venue symbols must be H or A, got {sorted(bad)!r}")


# ---------------------------------------------------------------------------
# Home-away patterns and pattern sets


@dataclass(frozen=True, order=True)
class HomeAwayPattern:
    """Venue vector of one team over the rounds, interpreted circularly.

    ``entries[r - 1]`` is the venue in round r.  The round preceding round 1
    is the last round, so a pattern of odd length (n - 1 rounds for n teams)
    always has at least one break.
    """

    entries: str

    def __post_init__(self) -> None:
        if len(self.entries) < 3 or len(self.entries) % 2 == 0:
            raise ValueError(
                f"pattern length must be odd and >= 3, got {len(self.entries)}"
            )
        _check_venue_string(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return self.entries

    def venue(self, r: int) -> str:
        """Venue in round r; circular, so venue(0) == venue(n - 1)."""
        return self.entries[(r - 1) % len(self.entries)]

    def complement(self) -> "HomeAwayPattern":
        return HomeAwayPattern(complement_venues(self.entries))


def breaks(pattern: HomeAwayPattern) -> tuple[tuple[int, str], ...]:
    """Break rounds of a pattern with their venue label.

    A break is a round whose venue repeats the previous round's, circularly
    (the predecessor of round 1 is the last round).  Returns (round, venue)
    pairs sorted by round: venue "H" marks a home break, "A" an away break.
    """
    e = pattern.entries
    return tuple(
        (r, e[r - 1]) for r in range(1, len(e) + 1) if e[r - 2] == e[r - 1]
    )


def single_break_pattern(n: int, break_round: int, venue: str) -> HomeAwayPattern:
    """The unique pattern over n - 1 rounds whose only break is at break_round.

    ``venue`` is the symbol repeated at the break.  Venues alternate away
    from the break, so round s carries ``venue`` exactly when s - break_round
    is even modulo n - 1.
    """
    if venue not in _VENUES:
        raise ValueError(f"venue must be H or A, got {venue!r}")
    rounds = n - 1
    if not 1 <= break_round <= rounds:
        raise ValueError(f"break round {break_round} outside 1..{rounds}")
    other = complement_venues(venue)
    entries = "".join(
        venue if (s - break_round) % rounds % 2 == 0 else other
        for s in range(1, rounds + 1)
    )
    return HomeAwayPattern(entries)


@dataclass(frozen=True)
class HapSet:
    """The collection of all teams' home-away patterns.

    ``patterns`` may be team-bound (index t - 1 belongs to team t, as
    produced by extract_haps) or unbound pattern slots (as produced by the
    generators); operations that rely on the binding say so.  Patterns must
    be pairwise distinct: two teams with equal patterns could never meet.
    A single-break set must be closed under complementation, a necessary
    condition for it to be realizable by any schedule.
    """

    patterns: tuple[HomeAwayPattern, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("empty pattern set")
        lengths = {len(p) for p in self.patterns}
        if len(lengths) != 1:
            raise ValueError(f"patterns of mixed lengths {sorted(lengths)}")
        (rounds,) = lengths
        if len(self.patterns) != rounds + 1:
            raise ValueError(
                f"{len(self.patterns)} patterns of length {rounds}; "
                f"need exactly {rounds + 1}"
            )
        if len(set(self.patterns)) != len(self.patterns):
            raise ValueError("patterns must be pairwise distinct")
        if self.is_single_break:
            missing = [
                p.entries for p in self.patterns
                if p.complement() not in set(self.patterns)
            ]
            if missing:
                raise ValueError(
                    f"single-break set not closed under complement; "
                    f"missing complements of {missing}"
                )

    @property
    def n(self) -> int:
        return len(self.patterns)

    @property
    def is_single_break(self) -> bool:
        return all(len(breaks(p)) == 1 for p in self.patterns)

    def _single_break_class(self, venue: str) -> tuple[HomeAwayPattern, ...]:
        if not self.is_single_break:
            raise ValueError("pattern set is not single-break")
        out = []
        for p in self.patterns:
            ((_, label),) = breaks(p)
            if label == venue:
                out.append(p)
        return tuple(sorted(out))

    @property
    def home_break_patterns(self) -> tuple[HomeAwayPattern, ...]:
        """Patterns whose single break is a home break, sorted."""
        return self._single_break_class(HOME)

    @property
    def away_break_patterns(self) -> tuple[HomeAwayPattern, ...]:
        """Patterns whose single break is an away break, sorted."""
        return self._single_break_class(AWAY)


@dataclass(frozen=True)
class DSequence:
    """Circular gaps between consecutive break rounds of a single-break set.

    For n teams there are n/2 break rounds r_1 < ... < r_{n/2}; gap i is
    r_{i+1} - r_i with the last gap wrapping around after n - 1 rounds.
    The gaps of a set extracted from a schedule therefore sum to n - 1,
    but the type also carries candidate sequences that generators reject.
    """

    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.gaps:
            raise ValueError("empty gap sequence")
        if any(not isinstance(g, int) or g < 1 for g in self.gaps):
            raise ValueError(f"gaps must be positive integers, got {self.gaps}")

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.gaps)

    @property
    def compact(self) -> str:
        """Digit-string form like "2221"; falls back to commas for gaps > 9."""
        if all(g < 10 for g in self.gaps):
            return "".join(str(g) for g in self.gaps)
        return str(self)


def d_sequence(hapset: HapSet) -> DSequence:
    """Break-gap representation of a single-break pattern set.

    Requires every break round to host exactly one home-break and one
    away-break pattern (always true for distinct single-break patterns
    closed under complementation).
    """
    if not hapset.is_single_break:
        raise ValueError("pattern set is not single-break")
    by_round: dict[int, list[str]] = {}
    for p in hapset.patterns:
        ((r, label),) = breaks(p)
        by_round.setdefault(r, []).append(label)
    for r, labels in sorted(by_round.items()):
        if sorted(labels) != [AWAY, HOME]:
            raise ValueError(
                f"break round {r} is not paired: labels {sorted(labels)}"
            )
    rounds = sorted(by_round)
    total = len(hapset.patterns[0])  # n - 1 rounds
    gaps = []
    for i, r in enumerate(rounds):
        nxt = rounds[i + 1] if i + 1 < len(rounds) else rounds[0] + total
        gaps.append(nxt - r)
    return DSequence(tuple(gaps))


def canonical_dseq(d: DSequence) -> DSequence:
    """Lexicographically largest sequence over all rotations of d and of its
    reversal.

    Feasibility of a gap sequence is invariant under cyclic shifts and
    reversal of the rounds, so this canonical form identifies the class.
    """
    gaps = d.gaps
    k = len(gaps)
    best = gaps
    for seq in (gaps, gaps[::-1]):
        doubled = seq + seq
        for start in range(k):
            cand = doubled[start : start + k]
            if cand > best:
                best = cand
    return DSequence(best)


# ---------------------------------------------------------------------------
# Schedules

Match = tuple[int, int]  # (home, away)


@dataclass(frozen=True)
class Schedule:
    """Full round and venue assignment of an SRR tournament.

    ``rounds[r - 1]`` holds the matches of round r as (home, away) rank
    pairs, sorted by home team.  Construction validates shape only (sizes
    and rank ranges); use verify_feasible for the tournament invariants so
    that malformed candidates can be diagnosed rather than rejected.
    """

    n: int
    rounds: tuple[tuple[Match, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 4 or self.n % 2:
            raise ValueError(f"team count must be even and >= 4, got {self.n}")
        if len(self.rounds) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} rounds, got {len(self.rounds)}"
            )
        normalized = []
        for idx, matches in enumerate(self.rounds, start=1):
            if len(matches) != self.n // 2:
                raise ValueError(
                    f"round {idx}: expected {self.n // 2} matches, "
                    f"got {len(matches)}"
                )
            for home, away in matches:
                for team in (home, away):
                    if not 1 <= team <= self.n:
                        raise ValueError(
                            f"round {idx}: team {team} outside 1..{self.n}"
                        )
                if home == away:
                    raise ValueError(f"round {idx}: team {home} plays itself")
            normalized.append(tuple(sorted(matches)))
        object.__setattr__(self, "rounds", tuple(normalized))

    @classmethod
    def from_matches(cls, n: int, matches) -> "Schedule":
        """Build from an iterable of (round, home, away) triples."""
        per_round: dict[int, list[Match]] = {r: [] for r in range(1, n)}
        for r, home, away in matches:
            if r not in per_round:
                raise ValueError(f"round {r} outside 1..{n - 1}")
            per_round[r].append((home, away))
        return cls(n, tuple(tuple(per_round[r]) for r in range(1, n)))

    def matches(self):
        """Iterate (round, home, away) over all matches."""
        for r, played in enumerate(self.rounds, start=1):
            for home, away in played:
                yield r, home, away

    def round_table(self) -> dict[tuple[int, int], int]:
        """Derived view: the round in which each ordered pair (i, j) meets.

        Later occurrences win for malformed schedules that repeat a pair;
        feasible schedules are unambiguous.
        """
        table: dict[tuple[int, int], int] = {}
        for r, home, away in self.matches():
            table[(home, away)] = r
            table[(away, home)] = r
        return table

    def flipped(self) -> "Schedule":
        """The same timetable with every home and away swapped."""
        return Schedule(
            self.n,
            tuple(
                tuple((away, home) for home, away in played)
                for played in self.rounds
            ),
        )


def verify_feasible(schedule: Schedule) -> list[str]:
    """Check the SRR invariants; an empty list means the schedule is feasible.

    Each violation names the offending round, team, or pair:
    every round must contain each team exactly once, and each unordered
    pair must meet exactly once over all rounds.
    """
    violations: list[str] = []
    for r, played in enumerate(schedule.rounds, start=1):
        seen = Counter()
        for home, away in played:
            seen[home] += 1
            seen[away] += 1
        for team in range(1, schedule.n + 1):
            if seen[team] == 0:
                violations.append(f"round {r}: team {team} does not play")
            elif seen[team] > 1:
                violations.append(
                    f"round {r}: duplicate team in round: team {team} "
                    f"appears {seen[team]} times"
                )
    pair_rounds: dict[tuple[int, int], list[int]] = {}
    for r, home, away in schedule.matches():
        pair_rounds.setdefault((min(home, away), max(home, away)), []).append(r)
    for i, j in itertools.combinations(range(1, schedule.n + 1), 2):
        rounds_met = pair_rounds.get((i, j), [])
        if not rounds_met:
            violations.append(f"pair {{{i},{j}}} never scheduled")
        elif len(rounds_met) > 1:
            violations.append(
                f"pair {{{i},{j}}} scheduled twice "
                f"(rounds {', '.join(map(str, sorted(rounds_met)))})"
            )
    return violations


def expected_venue(i: int, j: int) -> str:
    """Venue of team i against team j in a ranking-fair schedule.

    The venue is decided by rank parity: with equal parity the stronger
    team plays away, with different parity the stronger team plays at home
    (standard orientation, where team 1 hosts team 2).
    """
    if i == j:
        raise ValueError(f"invalid pair: team {i} cannot play itself")
    if i < 1 or j < 1:
        raise ValueError(f"ranks must be positive, got ({i}, {j})")
    stronger_home = (i - j) % 2 == 1
    i_is_stronger = i < j
    if i_is_stronger == stronger_home:
        return HOME
    return AWAY


@dataclass(frozen=True)
class RankingFairness:
    """Verdict of is_ranking_fair.

    When fair, ``orientation`` says which of the two admissible venue
    assignments the schedule follows (ORIENT_STANDARD: team 1 hosts team 2,
    or ORIENT_COMPLEMENT).  Otherwise ``violations`` lists the matches, as
    (round, home, away), that break the nearer orientation (named by
    ``against``).
    """

    fair: bool
    orientation: str | None
    violations: tuple[tuple[int, int, int], ...] = ()
    against: str | None = None


def is_ranking_fair(schedule: Schedule) -> RankingFairness:
    """Check whether every team's venues against ranked opponents alternate.

    Equivalently, every match's venue must follow expected_venue either
    globally or globally complemented; mixing the two orientations is
    exactly a violation of alternation for some team.
    """
    wrong_standard = []
    wrong_complement = []
    for r, home, away in schedule.matches():
        if expected_venue(home, away) == HOME:
            wrong_complement.append((r, home, away))
        else:
            wrong_standard.append((r, home, away))
    if not wrong_standard:
        return RankingFairness(True, ORIENT_STANDARD)
    if not wrong_complement:
        return RankingFairness(True, ORIENT_COMPLEMENT)
    if len(wrong_standard) <= len(wrong_complement):
        return RankingFairness(
            False, None, tuple(sorted(wrong_standard)), ORIENT_STANDARD
        )
    return RankingFairness(
        False, None, tuple(sorted(wrong_complement)), ORIENT_COMPLEMENT
    )


def _venues_by_opponent(schedule: Schedule, team: int) -> dict[int, str]:
    venues: dict[int, str] = {}
    for _, home, away in schedule.matches():
        if home == team:
            venues[away] = HOME
        elif away == team:
            venues[home] = AWAY
    return venues


def ranking_hap(schedule: Schedule, team: int) -> str:
    """Team's venue string over its opponents sorted from strongest to
    weakest (ranks ascending, skipping the team itself)."""
    if not 1 <= team <= schedule.n:
        raise ValueError(f"team {team} outside 1..{schedule.n}")
    venues = _venues_by_opponent(schedule, team)
    opponents = [u for u in range(1, schedule.n + 1) if u != team]
    missing = [u for u in opponents if u not in venues]
    if missing:
        raise ValueError(f"team {team} never plays teams {missing}")
    return "".join(venues[u] for u in opponents)


def extract_haps(schedule: Schedule) -> HapSet:
    """Per-round home-away patterns of all teams, bound to teams.

    Pattern at index t - 1 belongs to team t: it has H in round r exactly
    when team t hosts in round r.
    """
    per_team = {t: [""] * (schedule.n - 1) for t in range(1, schedule.n + 1)}
    for r, home, away in schedule.matches():
        per_team[home][r - 1] = HOME
        per_team[away][r - 1] = AWAY
    patterns = []
    for t in range(1, schedule.n + 1):
        entries = "".join(per_team[t])
        if len(entries) != schedule.n - 1:
            raise ValueError(f"team {t} does not play in every round")
        patterns.append(HomeAwayPattern(entries))
    return HapSet(tuple(patterns))


# ---------------------------------------------------------------------------
# Ranked venue matrices


def opponent_position(team: int, opponent: int) -> int:
    """1-based position of ``opponent`` in ``team``'s strength-sorted list."""
    if team == opponent:
        raise ValueError(f"invalid pair: team {team} cannot play itself")
    return opponent if opponent < team else opponent - 1


@dataclass(frozen=True)
class RankedVenueMatrix:
    """Per-team venue vectors over opponents sorted by strength.

    Row t - 1 belongs to the team of rank t; position j holds that team's
    venue against its j-th strongest opponent.  Unlike schedules, the team
    count m may be odd (leagues reduced to a single home-advantage bit per
    pairing).  Mirror entries must be complementary.
    """

    rows: tuple[str, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        m = len(self.rows)
        if m < 2:
            raise ValueError(f"need at least 2 teams, got {m}")
        for t, row in enumerate(self.rows, start=1):
            if len(row) != m - 1:
                raise ValueError(
                    f"rank {t}: row length {len(row)}, expected {m - 1}"
                )
            _check_venue_string(row)
        if self.names is not None and len(self.names) != m:
            raise ValueError(
                f"{len(self.names)} names for {m} teams"
            )
        for t in range(1, m + 1):
            for u in range(t + 1, m + 1):
                mine = self.rows[t - 1][opponent_position(t, u) - 1]
                theirs = self.rows[u - 1][opponent_position(u, t) - 1]
                if mine == theirs:
                    raise ValueError(
                        f"venue conflict between rank {t} and rank {u}: "
                        f"both report {mine}"
                    )

    @property
    def m(self) -> int:
        return len(self.rows)

    def name_of(self, rank: int) -> str:
        if self.names is None:
            return f"team {rank}"
        return self.names[rank - 1]


def ranking_matrix(schedule: Schedule) -> RankedVenueMatrix:
    """Assemble all teams' ranking venue vectors from a feasible schedule."""
    return RankedVenueMatrix(
        tuple(ranking_hap(schedule, t) for t in range(1, schedule.n + 1))
    )
