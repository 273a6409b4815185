"""Ranking-fair single round robin schedules.

A schedule is ranking-fair when every team, looking at its opponents from
strongest to weakest, alternates between having and not having the home
advantage.  The package constructs such schedules where they exist, proves
them absent where they do not, measures how far real schedules deviate, and
ships the file formats and command line tools tying it together.
"""

from .core import (
    AWAY,
    DSequence,
    HOME,
    HapSet,
    HomeAwayPattern,
    RankedVenueMatrix,
    RankingFairness,
    Schedule,
    breaks,
    canonical_dseq,
    complement_venues,
    d_sequence,
    expected_venue,
    extract_haps,
    is_ranking_fair,
    ranking_hap,
    ranking_matrix,
    single_break_pattern,
    verify_feasible,
)
from .construct import (
    circle_schedule,
    construct_4k,
    cps_hapset,
    cps_rankingfair_8,
    family_dseq_4k2,
    hapset_from_dseq,
)
from .fairness import FairnessReport, delta_t, f_t, fairness_report
from .solver import (
    Budget,
    SolveResult,
    SolveStatus,
    build_instance,
    solve_all_single_break,
    solve_ranking_fair,
)

__version__ = "0.1.0"

__all__ = [
    "AWAY",
    "Budget",
    "DSequence",
    "FairnessReport",
    "HOME",
    "HapSet",
    "HomeAwayPattern",
    "RankedVenueMatrix",
    "RankingFairness",
    "Schedule",
    "SolveResult",
    "SolveStatus",
    "breaks",
    "build_instance",
    "canonical_dseq",
    "circle_schedule",
    "complement_venues",
    "construct_4k",
    "cps_hapset",
    "cps_rankingfair_8",
    "d_sequence",
    "delta_t",
    "expected_venue",
    "extract_haps",
    "f_t",
    "fairness_report",
    "family_dseq_4k2",
    "hapset_from_dseq",
    "is_ranking_fair",
    "ranking_hap",
    "ranking_matrix",
    "single_break_pattern",
    "solve_all_single_break",
    "solve_ranking_fair",
    "verify_feasible",
]
