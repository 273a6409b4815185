"""Command line interface: generate, verify, score, and solve.

Exit codes are a stable contract: 0 success/feasible, 1 domain-negative
(infeasible schedule, no ranking-fair schedule, inconsistent matrix),
2 usage or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, dataio, fairness, solver
from .core import (
    DSequence,
    HapSet,
    RankedVenueMatrix,
    Schedule,
    breaks,
    canonical_dseq,
    d_sequence,
    extract_haps,
    is_ranking_fair,
    verify_feasible,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _dseq_line(hapset: HapSet) -> str:
    dseq = canonical_dseq(d_sequence(hapset))
    return f"canonical D-sequence: {dseq.compact} (gaps {dseq})"


def _cmd_generate(args: argparse.Namespace) -> int:
    n = args.n
    try:
        if args.method == "4k":
            schedule = construct.construct_4k(n)
        elif args.method == "cps":
            schedule = construct.circle_schedule(n)
        else:  # cps8
            if n != 8:
                raise ValueError("cps8 method requires n = 8")
            schedule = construct.cps_rankingfair_8()
    except ValueError as exc:
        return _fail_usage(str(exc))
    Path(args.out).write_text(dataio.write_schedule_text(schedule), "utf-8")
    print(_dseq_line(extract_haps(schedule)))
    report = fairness.fairness_report(schedule)
    print(
        f"F = {fairness.decimal_string(report.aggregate_f)} "
        f"(exact {report.aggregate_f})"
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.schedule).read_text("utf-8")
        schedule = dataio.parse_schedule_text(text)
    except OSError as exc:
        return _fail_usage(str(exc))
    except dataio.ParseError as exc:
        return _fail_usage(str(exc))
    violations = verify_feasible(schedule)
    if violations:
        print("feasible: no")
        for violation in violations:
            print(f"  {violation}")
        return EXIT_DOMAIN
    print("feasible: yes")
    hapset = extract_haps(schedule)
    for team, pattern in enumerate(hapset.patterns, start=1):
        marks = " ".join(f"{r}{venue}" for r, venue in breaks(pattern))
        print(f"team {team}: breaks {marks}")
    if hapset.is_single_break:
        print("single-break: yes")
        print(_dseq_line(hapset))
    else:
        print("single-break: no")
    verdict = is_ranking_fair(schedule)
    if verdict.fair:
        print(f"ranking-fair: yes ({verdict.orientation} orientation)")
    else:
        shown = ", ".join(
            f"round {r}: {home}-{away}" for r, home, away in verdict.violations[:5]
        )
        more = len(verdict.violations) - 5
        suffix = f" (+{more} more)" if more > 0 else ""
        print(f"ranking-fair: no, against {verdict.against}: {shown}{suffix}")
    return EXIT_OK


def _load_score_input(spec: str):
    if spec in dataio.DATASETS:
        return dataio.load_dataset(spec)
    text = Path(spec).read_text("utf-8")
    if text.startswith(dataio.SCHEDULE_MAGIC):
        return dataio.parse_schedule_text(text)
    return dataio.parse_matrix_text(text)


def _cmd_score(args: argparse.Namespace) -> int:
    try:
        source = _load_score_input(args.input)
    except OSError as exc:
        return _fail_usage(str(exc))
    except dataio.MatrixConflictError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except dataio.ParseError as exc:
        return _fail_usage(str(exc))
    report = fairness.fairness_report(source)
    print(
        f"F = {fairness.decimal_string(report.aggregate_f)} "
        f"(exact {report.aggregate_f})"
    )
    if args.per_team:
        for team in report.per_team:
            print(
                f"rank {team.rank} {team.name}: "
                f"F_t = {fairness.significant_string(team.f)} (exact {team.f})"
            )
    if args.emit_csv:
        lines = ["rank,name,F_t"]
        for team in report.per_team:
            lines.append(
                f"{team.rank},{team.name},{fairness.significant_string(team.f)}"
            )
        lines.append(
            f"aggregate,,{fairness.significant_string(report.aggregate_f)}"
        )
        Path(args.emit_csv).write_text("\n".join(lines) + "\n", "utf-8")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        gaps = tuple(int(g) for g in args.dseq.split(","))
        dseq = DSequence(gaps)
        hapset = construct.hapset_from_dseq(dseq, args.n)
    except ValueError as exc:
        return _fail_usage(f"bad D-sequence: {exc}")
    budget = solver.Budget(args.budget_nodes, args.budget_seconds)
    result = solver.solve_ranking_fair(hapset, budget)
    print(f"status: {result.status}")
    print(f"nodes: {result.nodes}")
    if result.status is solver.SolveStatus.FEASIBLE:
        assert result.schedule is not None
        if args.out:
            Path(args.out).write_text(
                dataio.write_schedule_text(result.schedule), "utf-8"
            )
        print(_dseq_line(extract_haps(result.schedule)))
        return EXIT_OK
    if result.status is solver.SolveStatus.INFEASIBLE:
        print(f"no ranking-fair schedule realizes D-sequence {dseq} at n={args.n}")
        return EXIT_DOMAIN
    print(f"search stopped: {result.detail}")
    return EXIT_UNKNOWN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrfair",
        description=(
            "Construct, verify, score, and search for ranking-fair "
            "single round robin schedules."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a constructed schedule")
    gen.add_argument("--n", type=int, required=True, help="team count")
    gen.add_argument(
        "--method",
        choices=("4k", "cps", "cps8"),
        default="4k",
        help="4k: ranking-fair for n = 0 (mod 4); cps: circle method on the "
        "canonical pattern set; cps8: the fixed ranking-fair n=8 table",
    )
    gen.add_argument("--out", required=True, help="output schedule file")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="check a schedule file")
    ver.add_argument("--schedule", required=True, help="schedule file to verify")
    ver.set_defaults(func=_cmd_verify)

    sco = sub.add_parser("score", help="fairness of a schedule or venue matrix")
    sco.add_argument(
        "--input",
        required=True,
        help="schedule file, venue matrix file, or bundled dataset name "
        f"({', '.join(dataio.DATASETS)})",
    )
    sco.add_argument("--per-team", action="store_true", help="print each F_t")
    sco.add_argument("--emit-csv", metavar="PATH", help="write rank,name,F_t rows")
    sco.set_defaults(func=_cmd_score)

    sol = sub.add_parser("solve", help="search a D-sequence for a ranking-fair schedule")
    sol.add_argument("--dseq", required=True, help="comma separated gaps, e.g. 2,2,2,1")
    sol.add_argument("--n", type=int, required=True, help="team count")
    sol.add_argument("--budget-nodes", type=int, default=solver.Budget().max_nodes)
    sol.add_argument(
        "--budget-seconds", type=float, default=solver.Budget().max_seconds
    )
    sol.add_argument("--out", help="write the witness schedule here if feasible")
    sol.set_defaults(func=_cmd_solve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
