"""Plain-text file formats and the bundled league data.

Two line-oriented formats, both UTF-8 with LF endings and bit-exact
headers so golden files diff cleanly:

schedule files::

    srr-schedule v1 n=<n>
    <round> <home> <away>          # one line per match, sorted (round, home)

ranked venue files::

    ranked-venues v1 m=<m> symbols=<pair>
    <rank>,<name>,<venue string>   # one line per team, rank ascending

The symbols pair names the two venue tokens used in the rows: H,A
directly, W,B for white/black pieces, or 2H,1H for leagues where a team
hosts a pairing either twice or once.  All aliases normalize to H/A on
parsing.
"""

from __future__ import annotations

from importlib import resources

from .core import RankedVenueMatrix, Schedule

SCHEDULE_MAGIC = "srr-schedule v1"
MATRIX_MAGIC = "ranked-venues v1"

# (home token, away token) alternatives accepted in venue files.
SYMBOL_PAIRS = (("H", "A"), ("W", "B"), ("2H", "1H"))

DATASETS = ("tata2002", "danish2008", "baseball2024")


class ParseError(ValueError):
    """Malformed file content; ``line`` is the first offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MatrixConflictError(ValueError):
    """Well-formed venue file whose mirror entries disagree."""


def write_schedule_text(schedule: Schedule) -> str:
    lines = [f"{SCHEDULE_MAGIC} n={schedule.n}"]
    for r, home, away in sorted(schedule.matches()):
        lines.append(f"{r} {home} {away}")
    return "\n".join(lines) + "\n"


def parse_schedule_text(text: str) -> Schedule:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty file")
    header = lines[0]
    prefix = f"{SCHEDULE_MAGIC} n="
    if not header.startswith(prefix):
        raise ParseError(1, f"expected header {prefix!r}<n>, got {header!r}")
    try:
        n = int(header[len(prefix):])
    except ValueError:
        raise ParseError(1, f"bad team count in header {header!r}") from None
    if n < 4 or n % 2:
        raise ParseError(1, f"team count must be even and >= 4, got {n}")
    matches = []
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            raise ParseError(lineno, "blank line")
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 fields, got {len(fields)}")
        try:
            r, home, away = (int(f) for f in fields)
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if not 1 <= r <= n - 1:
            raise ParseError(lineno, f"round {r} outside 1..{n - 1}")
        for team in (home, away):
            if not 1 <= team <= n:
                raise ParseError(lineno, f"team {team} outside 1..{n}")
        if home == away:
            raise ParseError(lineno, f"team {home} plays itself")
        if (r, home, away) in seen:
            raise ParseError(lineno, f"duplicate line for match {r} {home} {away}")
        seen.add((r, home, away))
        matches.append((r, home, away))
    expected = (n - 1) * (n // 2)
    if len(matches) != expected:
        raise ParseError(
            len(lines) + 1, f"expected {expected} match lines, got {len(matches)}"
        )
    try:
        return Schedule.from_matches(n, matches)
    except ValueError as exc:
        raise ParseError(len(lines) + 1, str(exc)) from None


def write_matrix_text(
    matrix: RankedVenueMatrix, symbols: tuple[str, str] = ("H", "A")
) -> str:
    if symbols not in SYMBOL_PAIRS:
        raise ValueError(f"unknown symbol pair {symbols!r}")
    home_token, away_token = symbols
    lines = [f"{MATRIX_MAGIC} m={matrix.m} symbols={home_token},{away_token}"]
    for rank, row in enumerate(matrix.rows, start=1):
        name = matrix.name_of(rank)
        if "," in name:
            raise ValueError(f"name {name!r} may not contain commas")
        venues = "".join(home_token if v == "H" else away_token for v in row)
        lines.append(f"{rank},{name},{venues}")
    return "\n".join(lines) + "\n"


def _untokenize(venues: str, symbols: tuple[str, str], lineno: int) -> str:
    home_token, away_token = symbols
    out = []
    pos = 0
    while pos < len(venues):
        if venues.startswith(home_token, pos):
            out.append("H")
            pos += len(home_token)
        elif venues.startswith(away_token, pos):
            out.append("A")
            pos += len(away_token)
        else:
            raise ParseError(
                lineno,
                f"venue string {venues!r} is not made of "
                f"{home_token!r}/{away_token!r} tokens",
            )
    return "".join(out)


def parse_matrix_text(text: str) -> RankedVenueMatrix:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty file")
    header = lines[0]
    if not header.startswith(f"{MATRIX_MAGIC} m="):
        raise ParseError(
            1, f"expected header {MATRIX_MAGIC!r} m=<m> symbols=<pair>, got {header!r}"
        )
    fields = header.split()
    if len(fields) != 4 or not fields[3].startswith("symbols="):
        raise ParseError(1, f"malformed header {header!r}")
    try:
        m = int(fields[2][len("m="):])
    except ValueError:
        raise ParseError(1, f"bad team count in header {header!r}") from None
    symbols = tuple(fields[3][len("symbols="):].split(","))
    if symbols not in SYMBOL_PAIRS:
        raise ParseError(
            1,
            f"unknown symbols {fields[3][len('symbols='):]!r}; "
            f"expected one of H,A W,B 2H,1H",
        )
    if len(lines) - 1 != m:
        raise ParseError(
            len(lines) + 1, f"expected {m} team lines, got {len(lines) - 1}"
        )
    rows: list[str] = []
    names: list[str] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",", 2)
        if len(parts) != 3:
            raise ParseError(lineno, f"expected rank,name,venues, got {line!r}")
        rank_text, name, venue_text = parts
        try:
            rank = int(rank_text)
        except ValueError:
            raise ParseError(lineno, f"bad rank {rank_text!r}") from None
        if rank != lineno - 1:
            raise ParseError(lineno, f"expected rank {lineno - 1}, got {rank}")
        venues = _untokenize(venue_text, symbols, lineno)
        if len(venues) != m - 1:
            raise ParseError(
                lineno, f"venue string has {len(venues)} entries, expected {m - 1}"
            )
        rows.append(venues)
        names.append(name)
    try:
        return RankedVenueMatrix(tuple(rows), tuple(names))
    except ValueError as exc:
        if "venue conflict" in str(exc):
            raise MatrixConflictError(str(exc)) from None
        raise ParseError(len(lines) + 1, str(exc)) from None


def load_dataset(name: str) -> RankedVenueMatrix:
    """Load one of the bundled venue tables by name (see DATASETS)."""
    if name not in DATASETS:
        raise KeyError(f"unknown dataset {name!r}; available: {', '.join(DATASETS)}")
    text = (
        resources.files("rrfair.data").joinpath(f"{name}.venues").read_text("utf-8")
    )
    return parse_matrix_text(text)
