"""Complete feasibility search for ranking-fair schedules on a pattern set.

Given a single-break pattern set, a match between two patterns' teams can
only be played in a round where the patterns' venues differ, and the round
chosen decides which team must be stronger: within a break class (both
home-break or both away-break) the home side must be the weaker team, across
classes the home side must be the stronger one.  The search therefore
assigns a round to every pattern pair, propagating per-pattern round
availability and the transitive closure of the induced strength order.  A
complete acyclic assignment determines the team ranks outright (rank =
1 + number of stronger patterns), and home-break patterns land on odd ranks
automatically because they host one round more than they visit.

Exhausting this space is exhaustive over ranking-fair schedules in the
standard orientation (team 1 hosts team 2).  The complement orientation
needs no separate search: a realizable single-break set is closed under
complementation, so flipping every venue maps its ranking-fair schedules
onto schedules of the same set.  All pruning rules remove only branches
that cannot complete, so an exhausted search certifies infeasibility.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field

from .core import (
    DSequence,
    HOME,
    HapSet,
    HomeAwayPattern,
    Schedule,
    canonical_dseq,
    extract_haps,
    is_ranking_fair,
    verify_feasible,
)
from .construct import hapset_from_dseq


class SolveStatus(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Budget:
    """Search limits; hitting either one yields UNKNOWN, never INFEASIBLE."""

    max_nodes: int = 100_000_000
    max_seconds: float = 300.0


@dataclass(frozen=True)
class SolveInstance:
    """Pattern pairs with the rounds usable for each strength order.

    ``patterns`` lists the home-break class first, each class sorted, and
    team parity is pinned to the classes: home-break patterns can only take
    odd ranks, away-break patterns even ranks.  ``allowed_rounds[(p, q)]``
    holds the rounds where the match can be played with pattern p's team
    stronger; it is disjoint from ``allowed_rounds[(q, p)]`` because the
    venues differ between the two cases.
    """

    hapset: HapSet
    patterns: tuple[HomeAwayPattern, ...]
    allowed_rounds: dict[tuple[int, int], frozenset[int]]

    @property
    def n(self) -> int:
        return len(self.patterns)

    @property
    def rounds(self) -> int:
        return len(self.patterns) - 1


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one search: verdict, witness, and search statistics."""

    status: SolveStatus
    schedule: Schedule | None
    assignment: dict[HomeAwayPattern, int] | None
    nodes: int
    seconds: float
    detail: str = ""


def build_instance(hapset: HapSet) -> SolveInstance:
    """Compute the usable-round sets for every ordered pattern pair."""
    if not hapset.is_single_break:
        raise ValueError("search requires a single-break pattern set")
    home = hapset.home_break_patterns
    away = hapset.away_break_patterns
    if len(home) != len(away):
        raise ValueError(
            f"unbalanced partition: {len(home)} home-break vs "
            f"{len(away)} away-break patterns"
        )
    patterns = home + away
    half = len(home)
    allowed: dict[tuple[int, int], frozenset[int]] = {}
    for a, b in itertools.permutations(range(len(patterns)), 2):
        pa, pb = patterns[a], patterns[b]
        same_class = (a < half) == (b < half)
        if same_class:
            # Equal rank parity: the stronger team plays away.
            usable = {
                r
                for r in range(1, len(patterns))
                if pa.venue(r) != HOME and pb.venue(r) == HOME
            }
        else:
            # Different rank parity: the stronger team plays at home.
            usable = {
                r
                for r in range(1, len(patterns))
                if pa.venue(r) == HOME and pb.venue(r) != HOME
            }
        allowed[(a, b)] = frozenset(usable)
    return SolveInstance(hapset, patterns, allowed)


class _BudgetExceeded(Exception):
    pass


class _Search:
    """Backtracking over pair-round choices with bitmask domains."""

    def __init__(self, instance: SolveInstance, budget: Budget):
        self.instance = instance
        self.budget = budget
        self.patterns = instance.patterns
        self.n = instance.n
        self.half = self.n // 2
        self.nodes = 0
        self._deadline_stride = 1024
        pairs = list(itertools.combinations(range(self.n), 2))
        self.pairs = pairs
        self.pair_index = {ab: k for k, ab in enumerate(pairs)}
        self.amask = []
        self.bmask = []
        for a, b in pairs:
            self.amask.append(_mask(instance.allowed_rounds[(a, b)]))
            self.bmask.append(_mask(instance.allowed_rounds[(b, a)]))
        self.dom = [am | bm for am, bm in zip(self.amask, self.bmask)]
        self.fixedr = [-1] * len(pairs)
        self.pairs_of = [[] for _ in range(self.n)]
        for k, (a, b) in enumerate(pairs):
            self.pairs_of[a].append(k)
            self.pairs_of[b].append(k)
        full = (1 << instance.rounds) - 1
        self.avail = [full] * self.n
        self.strong = [0] * self.n
        self.weak = [0] * self.n
        self.class_mask_home = (1 << self.half) - 1
        self.class_mask_away = ((1 << self.n) - 1) ^ self.class_mask_home
        self.trail: list[tuple[int, int, int]] = []
        self.pending: list[tuple[int, int, int]] = []
        # Patterns whose pairs changed since the last Hall check; start with
        # everything so the initial propagation vets the whole instance.
        self.dirty = (1 << self.n) - 1
        # Rank-order branching state: patterns ranked so far, strongest first.
        self.order: list[int] = []
        self.unranked = (1 << self.n) - 1

    # Trail codes.
    _DOM, _FIXED, _AVAIL, _STRONG, _WEAK = range(5)

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            code, idx, old = trail.pop()
            if code == self._DOM:
                self.dom[idx] = old
            elif code == self._FIXED:
                self.fixedr[idx] = old
            elif code == self._AVAIL:
                self.avail[idx] = old
            elif code == self._STRONG:
                self.strong[idx] = old
            else:
                self.weak[idx] = old

    # -- propagation ------------------------------------------------------

    def _propagate(self, seed: list[tuple[int, int, int]]) -> bool:
        """Process fixes and order edges to a fixpoint; False on wipeout.

        Seed items are ("fix", pair, round) encoded as (0, k, r) and
        ("edge", x, y) encoded as (1, x, y) with x the stronger pattern.
        """
        self.pending = list(seed)
        pending = self.pending
        while pending:
            kind, u, v = pending.pop()
            ok = self._fix(u, v) if kind == 0 else self._add_edge(u, v)
            if not ok:
                return False
        return self._rounds_matchable() and self._class_counts_ok()

    def _fix(self, k: int, r: int) -> bool:
        if self.fixedr[k] >= 0:
            return self.fixedr[k] == r
        bit = 1 << (r - 1)
        if not self.dom[k] & bit:
            return False
        a, b = self.pairs[k]
        self.trail.append((self._FIXED, k, self.fixedr[k]))
        self.fixedr[k] = r
        if self.dom[k] != bit:
            self.trail.append((self._DOM, k, self.dom[k]))
            self.dom[k] = bit
        if bit & self.amask[k]:
            self.pending.append((1, a, b))
        else:
            self.pending.append((1, b, a))
        for p in (a, b):
            if not self.avail[p] & bit:
                return False
            self.trail.append((self._AVAIL, p, self.avail[p]))
            self.avail[p] &= ~bit
            self.dirty |= 1 << p
            for j in self.pairs_of[p]:
                if j == k or self.fixedr[j] >= 0:
                    continue
                if self.dom[j] & bit:
                    if not self._shrink(j, self.dom[j] & ~bit):
                        return False
        return True

    def _shrink(self, j: int, new_dom: int) -> bool:
        if new_dom == 0:
            return False
        self.trail.append((self._DOM, j, self.dom[j]))
        self.dom[j] = new_dom
        a, b = self.pairs[j]
        self.dirty |= (1 << a) | (1 << b)
        if not new_dom & self.amask[j]:
            self.pending.append((1, b, a))
        elif not new_dom & self.bmask[j]:
            self.pending.append((1, a, b))
        if new_dom & (new_dom - 1) == 0:
            self.pending.append((0, j, new_dom.bit_length()))
        return True

    def _add_edge(self, x: int, y: int) -> bool:
        """Record pattern x's team as stronger than y's, transitively."""
        if self.weak[x] >> y & 1:
            return True
        group_x = self.strong[x] | (1 << x)
        group_y = self.weak[y] | (1 << y)
        if group_x & group_y:
            return False  # would close a strength cycle
        new_edges = []
        rest = group_y
        while rest:
            vbit = rest & -rest
            rest ^= vbit
            v = vbit.bit_length() - 1
            add = group_x & ~self.strong[v]
            if not add:
                continue
            self.trail.append((self._STRONG, v, self.strong[v]))
            self.strong[v] |= add
            while add:
                ubit = add & -add
                add ^= ubit
                u = ubit.bit_length() - 1
                self.trail.append((self._WEAK, u, self.weak[u]))
                self.weak[u] |= vbit
                new_edges.append((u, v))
        for u, v in new_edges:
            if u < v:
                j = self.pair_index[(u, v)]
                keep = self.amask[j]
            else:
                j = self.pair_index[(v, u)]
                keep = self.bmask[j]
            new_dom = self.dom[j] & keep
            if new_dom != self.dom[j]:
                if not self._shrink(j, new_dom):
                    return False
        return True

    def _rounds_matchable(self) -> bool:
        """Hall condition per touched pattern: its unfixed pairs must admit
        a perfect matching into its remaining rounds (all-different)."""
        dirty = self.dirty
        self.dirty = 0
        while dirty:
            pbit = dirty & -dirty
            dirty ^= pbit
            if not self._pattern_matchable(pbit.bit_length() - 1):
                return False
        return True

    def _pattern_matchable(self, p: int) -> bool:
        doms = [
            self.dom[j] for j in self.pairs_of[p] if self.fixedr[j] < 0
        ]
        matched_pair: dict[int, int] = {}  # round bit index -> pair position
        match_of: list[int] = [-1] * len(doms)

        def augment(i: int, visited: int) -> tuple[bool, int]:
            rest = doms[i]
            while rest:
                rbit = rest & -rest
                rest ^= rbit
                if visited & rbit:
                    continue
                visited |= rbit
                r = rbit.bit_length() - 1
                holder = matched_pair.get(r, -1)
                if holder < 0:
                    matched_pair[r] = i
                    match_of[i] = r
                    return True, visited
                ok, visited = augment(holder, visited)
                if ok:
                    matched_pair[r] = i
                    match_of[i] = r
                    return True, visited
            return False, visited

        for i in range(len(doms)):
            ok, _ = augment(i, 0)
            if not ok:
                return False
        return True

    def _class_counts_ok(self) -> bool:
        """Rank parity feasibility from the partial order.

        A home-break pattern finishes with equally many stronger patterns
        in each class; an away-break pattern with exactly one more stronger
        home-break than stronger away-break.  Known stronger/weaker sets
        bound those counts, so empty ranges prove the branch dead.
        """
        half = self.half
        for p in range(self.n):
            stronger_home = (self.strong[p] & self.class_mask_home).bit_count()
            stronger_away = (self.strong[p] & self.class_mask_away).bit_count()
            weaker_home = (self.weak[p] & self.class_mask_home).bit_count()
            weaker_away = (self.weak[p] & self.class_mask_away).bit_count()
            if p < half:
                max_home = half - 1 - weaker_home
                max_away = half - weaker_away
                if max(stronger_home, stronger_away) > min(max_home, max_away):
                    return False
            else:
                max_home = half - weaker_home
                max_away = half - 1 - weaker_away
                if max(stronger_home, stronger_away + 1) > min(
                    max_home, max_away + 1
                ):
                    return False
        return True

    # -- search -----------------------------------------------------------

    def _select(self) -> int:
        best = -1
        best_size = 1 << 30
        for k, fr in enumerate(self.fixedr):
            if fr < 0:
                size = self.dom[k].bit_count()
                if size < best_size:
                    best, best_size = k, size
                    if size <= 2:
                        break
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % self._deadline_stride == 0:
            if time.monotonic() > self._deadline:
                raise _BudgetExceeded

    def _rank_candidates(self) -> list[int]:
        """Patterns eligible for the next (strongest unranked) position.

        Odd positions must take home-break patterns, even positions
        away-break ones.  A pattern already known weaker than some unranked
        pattern, or stronger than some ranked one, cannot be next; skipping
        it here only prunes provably dead branches.
        """
        next_rank = len(self.order) + 1
        class_mask = (
            self.class_mask_home if next_rank % 2 else self.class_mask_away
        )
        ranked_mask = ((1 << self.n) - 1) ^ self.unranked
        out = []
        rest = self.unranked & class_mask
        while rest:
            pbit = rest & -rest
            rest ^= pbit
            p = pbit.bit_length() - 1
            if self.strong[p] & self.unranked or self.weak[p] & ranked_mask:
                continue
            out.append(p)
        return out

    def _rank_seed(self, p: int) -> list[tuple[int, int, int]]:
        """Order edges that make p the strongest unranked pattern."""
        seed = [(1, q, p) for q in self.order]
        rest = self.unranked & ~(1 << p)
        while rest:
            qbit = rest & -rest
            rest ^= qbit
            seed.append((1, p, qbit.bit_length() - 1))
        return seed

    def _search(self) -> bool:
        """Two branching phases, both complete.

        While the strength order is undecided, branch on which pattern takes
        the next (strongest open) position; each choice floods the closure
        with order edges, so the R-side domain cuts and the Hall checks bite
        immediately.  Candidates are probed first and tried freest-first
        (largest remaining domains after trial propagation), which steers
        straight to witnesses on feasible instances; probing discards only
        candidates whose propagation already fails, so no solution is lost.
        Once every rank is fixed, the leftover round choices are settled by
        plain most-constrained-pair backtracking.
        """
        if self.unranked:
            candidates = self._rank_candidates()
            if len(candidates) > 1:
                scored = []
                for p in candidates:
                    mark = len(self.trail)
                    if self._propagate(self._rank_seed(p)):
                        freedom = sum(
                            self.dom[j].bit_count()
                            for j in range(len(self.pairs))
                            if self.fixedr[j] < 0
                        )
                        scored.append((-freedom, p))
                    self._undo(mark)
                candidates = [p for _, p in sorted(scored)]
            for p in candidates:
                self._tick()
                mark = len(self.trail)
                seed = self._rank_seed(p)
                self.order.append(p)
                self.unranked ^= 1 << p
                if self._propagate(seed) and self._search():
                    return True
                self.unranked ^= 1 << p
                self.order.pop()
                self._undo(mark)
            return False
        k = self._select()
        if k < 0:
            return True
        bits = self.dom[k]
        while bits:
            bit = bits & -bits
            bits ^= bit
            self._tick()
            mark = len(self.trail)
            if self._propagate([(0, k, bit.bit_length())]):
                if self._search():
                    return True
            self._undo(mark)
        return False

    def run(self) -> SolveResult:
        started = time.monotonic()
        self._deadline = started + self.budget.max_seconds
        seed: list[tuple[int, int, int]] = []
        for j, dom in enumerate(self.dom):
            if dom == 0:
                return SolveResult(
                    SolveStatus.INFEASIBLE, None, None, 0,
                    time.monotonic() - started,
                )
            a, b = self.pairs[j]
            if not dom & self.amask[j]:
                seed.append((1, b, a))
            elif not dom & self.bmask[j]:
                seed.append((1, a, b))
            if dom & (dom - 1) == 0:
                seed.append((0, j, dom.bit_length()))
        try:
            if self._propagate(seed) and self._search():
                schedule, assignment = self._extract()
                return SolveResult(
                    SolveStatus.FEASIBLE, schedule, assignment,
                    self.nodes, time.monotonic() - started,
                )
            return SolveResult(
                SolveStatus.INFEASIBLE, None, None,
                self.nodes, time.monotonic() - started,
            )
        except _BudgetExceeded:
            return SolveResult(
                SolveStatus.UNKNOWN, None, None,
                self.nodes, time.monotonic() - started,
                detail="budget exceeded",
            )

    def _extract(self) -> tuple[Schedule, dict[HomeAwayPattern, int]]:
        ranks = [1 + self.strong[p].bit_count() for p in range(self.n)]
        assert sorted(ranks) == list(range(1, self.n + 1))
        assert all(
            ranks[p] % 2 == (1 if p < self.half else 0) for p in range(self.n)
        )
        matches = []
        for k, (a, b) in enumerate(self.pairs):
            r = self.fixedr[k]
            assert r >= 1
            if self.patterns[a].venue(r) == HOME:
                matches.append((r, ranks[a], ranks[b]))
            else:
                matches.append((r, ranks[b], ranks[a]))
        schedule = Schedule.from_matches(self.n, matches)
        assignment = {
            self.patterns[p]: ranks[p] for p in range(self.n)
        }
        return schedule, assignment


def _mask(rounds: frozenset[int]) -> int:
    out = 0
    for r in rounds:
        out |= 1 << (r - 1)
    return out


def _check_witness(result: SolveResult, hapset: HapSet) -> None:
    schedule = result.schedule
    assert schedule is not None and result.assignment is not None
    violations = verify_feasible(schedule)
    if violations:
        raise RuntimeError(f"witness infeasible: {violations[:3]}")
    verdict = is_ranking_fair(schedule)
    if not verdict.fair:
        raise RuntimeError(
            f"witness not ranking-fair: {verdict.violations[:3]}"
        )
    extracted = extract_haps(schedule)
    for pattern, rank in result.assignment.items():
        if extracted.patterns[rank - 1] != pattern:
            raise RuntimeError(
                f"witness team {rank} does not realize its pattern"
            )
    if set(extracted.patterns) != set(hapset.patterns):
        raise RuntimeError("witness realizes a different pattern set")


def solve_ranking_fair(hapset: HapSet, budget: Budget | None = None) -> SolveResult:
    """Find a ranking-fair schedule realizing the pattern set, or certify
    that none exists.

    FEASIBLE results carry a verified witness schedule and the pattern to
    rank assignment; INFEASIBLE is only returned after exhausting the
    search space; exceeding the budget yields UNKNOWN.
    """
    instance = build_instance(hapset)
    result = _Search(instance, budget or Budget()).run()
    if result.status is SolveStatus.FEASIBLE:
        _check_witness(result, hapset)
    return result


def _compositions(total: int, parts: int):
    """All orderings of ``parts`` positive integers summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def solve_all_single_break(
    n: int, budget: Budget | None = None
) -> dict[DSequence, SolveResult]:
    """Verdicts for every canonical break-gap sequence at n in {4, 6}.

    Each canonical sequence of n/2 gaps summing to n - 1 is expanded into
    its pattern set (breaks placed from round 1) and searched.  A sequence
    whose expansion degenerates to duplicate patterns cannot be realized
    and is reported infeasible outright.
    """
    if n not in (4, 6):
        raise ValueError(f"direct enumeration only supports n in {{4, 6}}, got {n}")
    canonical = sorted(
        {canonical_dseq(DSequence(c)).gaps for c in _compositions(n - 1, n // 2)},
        reverse=True,
    )
    results: dict[DSequence, SolveResult] = {}
    for gaps in canonical:
        dseq = DSequence(gaps)
        try:
            hapset = hapset_from_dseq(dseq, n)
        except ValueError as exc:
            results[dseq] = SolveResult(
                SolveStatus.INFEASIBLE, None, None, 0, 0.0,
                detail=f"degenerate expansion: {exc}",
            )
            continue
        results[dseq] = solve_ranking_fair(hapset, budget)
    return results
