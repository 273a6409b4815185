"""Ranking-fairness measure for venue vectors over strength-sorted opponents.

For one team the imbalance is summed over every consecutive sub-interval of
its venue vector: each interval contributes how far its home-game count is
from half the interval length.  The per-team score is then shifted and
scaled so that a perfectly alternating vector scores 0 and the worst vector
(all home games against the stronger half, all away against the weaker
half) scores 1; a schedule's score is the average over its teams.

All arithmetic is exact rational (fractions.Fraction); decimals appear only
when rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import RankedVenueMatrix, Schedule, _check_venue_string, ranking_matrix


def delta_t(row: str) -> Fraction:
    """Raw imbalance of one venue vector.

    Sums |H(i, j) - (j - i + 1) / 2| over all sub-intervals [i, j] of the
    vector, where H(i, j) counts home games in positions i..j.  Computed
    with prefix sums; exact in halves.
    """
    _check_venue_string(row)
    if len(row) < 2:
        raise ValueError(f"venue vector too short: length {len(row)} < 2")
    prefix = [0]
    for symbol in row:
        prefix.append(prefix[-1] + (symbol == "H"))
    # Work in doubled units so every term is an integer: the term for
    # [i, j] is |2 * H(i, j) - (j - i + 1)| / 2.
    doubled = 0
    for i in range(1, len(row)):
        for j in range(i + 1, len(row) + 1):
            doubled += abs(2 * (prefix[j] - prefix[i - 1]) - (j - i + 1))
    return Fraction(doubled, 2)


def f_t(row: str) -> Fraction:
    """Normalized imbalance of one venue vector.

    With m = len(row) + 1 teams, subtracts the floor (m - 2)^2 / 8 that any
    vector pays through its odd-length intervals and divides by
    m (m - 1) (m - 2) / 24, placing alternating vectors at 0 and the worst
    vector at 1 for even m.  Odd m uses the same formula verbatim; its
    extremes then sit slightly off 0 and 1.
    """
    m = len(row) + 1
    correction = Fraction((m - 2) ** 2, 8)
    scale = Fraction(m * (m - 1) * (m - 2), 24)
    return (delta_t(row) - correction) / scale


@dataclass(frozen=True)
class TeamFairness:
    rank: int
    name: str
    delta: Fraction
    f: Fraction


@dataclass(frozen=True)
class FairnessReport:
    """Per-team fairness values and their average for one schedule/matrix."""

    per_team: tuple[TeamFairness, ...]
    aggregate_f: Fraction

    def team(self, rank: int) -> TeamFairness:
        return self.per_team[rank - 1]


def fairness_report(source: Schedule | RankedVenueMatrix) -> FairnessReport:
    """Score a schedule (via its ranking venue vectors) or a venue matrix."""
    if isinstance(source, Schedule):
        matrix = ranking_matrix(source)
    elif isinstance(source, RankedVenueMatrix):
        matrix = source
    else:
        raise TypeError(f"cannot score {type(source).__name__}")
    per_team = tuple(
        TeamFairness(rank, matrix.name_of(rank), delta_t(row), f_t(row))
        for rank, row in enumerate(matrix.rows, start=1)
    )
    aggregate = sum((t.f for t in per_team), Fraction(0)) / len(per_team)
    return FairnessReport(per_team, aggregate)


def decimal_string(value: Fraction, places: int = 3) -> str:
    """Exact fixed-point rendering, rounding halves away from zero.

    Integer arithmetic throughout, so published reference values cannot be
    perturbed by binary floating point.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    shifted = value * 10**places
    quotient, remainder = divmod(abs(shifted.numerator), shifted.denominator)
    if 2 * remainder >= shifted.denominator:
        quotient += 1
    sign = "-" if value < 0 and quotient else ""
    digits = str(quotient).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def significant_string(value: Fraction, significant: int = 6) -> str:
    """Decimal rendering with at least ``significant`` significant digits."""
    if significant < 1:
        raise ValueError("significant must be >= 1")
    if value == 0:
        return decimal_string(value, significant)
    places = significant
    magnitude = abs(value)
    while magnitude * 10**places < 10 ** (significant - 1):
        places += 1
    return decimal_string(value, places)
