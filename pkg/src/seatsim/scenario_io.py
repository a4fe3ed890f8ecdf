"""Text formats: scenario files, choice files, and trajectory CSV.

All files are UTF-8 with LF line endings. Blank lines are ignored and
lines whose first non-space character is ``;`` are comments (``#`` marks
an occupied seat, so it cannot introduce comments).

Scenario format::

    rows 7
    cols 14
    grid
    ..##..........        <- exactly `rows` lines of `cols` characters,
    ..............           '.' empty, '#' occupied
    arrivals
    2 1 2                 <- group sizes in arrival order; the line may be
                             omitted when no groups arrive
    observed              <- optional section: the real seats taken at
    1: 3,4 3,5               each step, `row,seat` pairs, 1-based,
    2: 5,8 5,9               one line per arrival step

Choices format (questionnaire answers), records separated by blank
lines::

    groups 2              <- number of distinct seated groups shown
    grid
    .##......##...        <- occupancy block, dimensions inferred
    ..............
    chosen 2,5            <- the seat the respondent marked

Trajectory CSV schema: header ``step,label,mean,std,min,max``; one row
per (step, label), ordered by step then label; a plain trajectory emits
its integer entropy as mean with std 0 and min = max = mean.
"""

from __future__ import annotations

from typing import Sequence

from .analysis import ChoiceRecord
from .grid import Auditorium, SeatCoord
from .simulation import MeanTrajectory, Scenario


class ParseError(Exception):
    """Malformed input text; carries the 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ValidationError(Exception):
    """Well-formed input that violates a scenario or choices constraint."""


class LengthMismatch(Exception):
    """Trajectories with different step counts were emitted together."""


class _Lines:
    """Cursor over effective (non-blank, non-comment) lines."""

    def __init__(self, text: str):
        self._items = [
            (number, line.rstrip())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.lstrip().startswith(";")
        ]
        self._pos = 0
        self.last_line = self._items[-1][0] if self._items else 1

    def peek(self) -> tuple[int, str] | None:
        if self._pos < len(self._items):
            return self._items[self._pos]
        return None

    def take(self, expected: str) -> tuple[int, str]:
        item = self.peek()
        if item is None:
            raise ParseError(self.last_line, 1, f"unexpected end of file, expected {expected}")
        self._pos += 1
        return item


def _parse_int(token: str, line: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, column, f"{what} must be an integer, got {token!r}") from None


def _take_int_field(cur: _Lines, keyword: str) -> int:
    line, text = cur.take(f"'{keyword} <n>'")
    parts = text.split()
    if not parts or parts[0] != keyword:
        raise ParseError(line, 1, f"expected '{keyword} <n>', got {text!r}")
    if len(parts) != 2:
        raise ParseError(line, len(keyword) + 2, f"expected one value after '{keyword}'")
    return _parse_int(parts[1], line, text.index(parts[1]) + 1, keyword)


def _take_keyword(cur: _Lines, keyword: str) -> int:
    line, text = cur.take(f"'{keyword}'")
    if text.strip() != keyword:
        raise ParseError(line, 1, f"expected '{keyword}', got {text!r}")
    return line


def _parse_coord(token: str, line: int, column: int) -> SeatCoord:
    row_part, comma, seat_part = token.partition(",")
    if not comma or not row_part or not seat_part:
        raise ParseError(line, column, f"expected 'row,seat', got {token!r}")
    return SeatCoord(
        _parse_int(row_part, line, column, "row"),
        _parse_int(seat_part, line, column + len(row_part) + 1, "seat"),
    )


def _parse_grid_block(
    cur: _Lines, rows: int, cols: int
) -> list[SeatCoord]:
    occupied: list[SeatCoord] = []
    for r in range(1, rows + 1):
        line, text = cur.take(f"grid row {r}")
        if len(text) != cols:
            raise ParseError(
                line, min(len(text), cols) + 1,
                f"grid row {r} has {len(text)} characters, expected {cols}",
            )
        for s, ch in enumerate(text, start=1):
            if ch == "#":
                occupied.append(SeatCoord(r, s))
            elif ch != ".":
                raise ParseError(line, s, f"bad grid character {ch!r}, expected '.' or '#'")
    return occupied


def parse_scenario(text: str) -> Scenario:
    """Parse the scenario format; see the module docstring for the grammar.

    Raises :class:`ParseError` for malformed text and
    :class:`ValidationError` for semantic violations (out-of-bounds or
    duplicated seats, arrivals/observed mismatches).
    """
    cur = _Lines(text)
    rows = _take_int_field(cur, "rows")
    cols = _take_int_field(cur, "cols")
    if rows < 1:
        raise ValidationError(f"rows must be positive, got {rows}")
    if cols < 1:
        raise ValidationError(f"cols must be positive, got {cols}")
    _take_keyword(cur, "grid")
    initial = _parse_grid_block(cur, rows, cols)

    _take_keyword(cur, "arrivals")
    arrivals: list[int] = []
    item = cur.peek()
    if item is not None and item[1].strip() != "observed":
        line, text = cur.take("arrival sizes")
        search_from = 0
        for token in text.split():
            column = text.index(token, search_from) + 1
            search_from = column - 1 + len(token)
            size = _parse_int(token, line, column, "group size")
            if size < 1:
                raise ValidationError(f"line {line}: group size must be positive, got {size}")
            arrivals.append(size)

    observed: list[tuple[SeatCoord, ...]] | None = None
    item = cur.peek()
    if item is not None and item[1].strip() == "observed":
        cur.take("'observed'")
        observed = []
        taken = {coord: "the initial configuration" for coord in initial}
        while cur.peek() is not None:
            line, text = cur.take("observed step")
            head, colon, rest = text.partition(":")
            if not colon:
                raise ParseError(line, 1, "expected '<step>: row,seat ...'")
            step = _parse_int(head.strip(), line, 1, "step number")
            if step != len(observed) + 1:
                raise ValidationError(
                    f"line {line}: observed step {step} out of order, expected {len(observed) + 1}"
                )
            seats = []
            search_from = len(head) + 1
            for token in rest.split():
                column = text.index(token, search_from) + 1
                search_from = column - 1 + len(token)
                coord = _parse_coord(token, line, column)
                if not (1 <= coord.row <= rows and 1 <= coord.seat <= cols):
                    raise ValidationError(
                        f"line {line}: observed seat ({coord.row},{coord.seat}) "
                        f"outside the {rows}x{cols} grid"
                    )
                if coord in taken:
                    raise ValidationError(
                        f"line {line}: observed seat ({coord.row},{coord.seat}) "
                        f"is already occupied by {taken[coord]}"
                    )
                taken[coord] = f"step {step}"
                seats.append(coord)
            observed.append(tuple(seats))

    item = cur.peek()
    if item is not None:
        raise ParseError(item[0], 1, f"unexpected line {item[1]!r}")

    if observed is not None:
        if len(observed) != len(arrivals):
            raise ValidationError(
                f"observed covers {len(observed)} steps but arrivals lists "
                f"{len(arrivals)} groups"
            )
        for index, (seats, size) in enumerate(zip(observed, arrivals), start=1):
            if len(seats) != size:
                raise ValidationError(
                    f"observed step {index} seats {len(seats)} people but the "
                    f"arriving group has size {size}"
                )
    return Scenario(
        rows=rows,
        cols=cols,
        initial_occupancy=tuple(initial),
        arrivals=tuple(arrivals),
        observed=tuple(observed) if observed is not None else None,
    )


def validate_scenario(scenario: Scenario) -> None:
    """Check a programmatically built Scenario; raises ValidationError."""
    if scenario.rows < 1 or scenario.cols < 1:
        raise ValidationError(
            f"auditorium must be at least 1x1, got {scenario.rows}x{scenario.cols}"
        )
    taken: set[SeatCoord] = set()
    for coord in scenario.initial_occupancy:
        if not (1 <= coord.row <= scenario.rows and 1 <= coord.seat <= scenario.cols):
            raise ValidationError(f"initial seat {tuple(coord)} out of bounds")
        if coord in taken:
            raise ValidationError(f"initial seat {tuple(coord)} occupied twice")
        taken.add(coord)
    for size in scenario.arrivals:
        if size < 1:
            raise ValidationError(f"group size must be positive, got {size}")
    if scenario.observed is None:
        return
    if len(scenario.observed) != len(scenario.arrivals):
        raise ValidationError(
            f"observed covers {len(scenario.observed)} steps but arrivals lists "
            f"{len(scenario.arrivals)} groups"
        )
    for index, (seats, size) in enumerate(
        zip(scenario.observed, scenario.arrivals), start=1
    ):
        if len(seats) != size:
            raise ValidationError(
                f"observed step {index} seats {len(seats)} people but the "
                f"arriving group has size {size}"
            )
        for coord in seats:
            if not (1 <= coord.row <= scenario.rows and 1 <= coord.seat <= scenario.cols):
                raise ValidationError(f"observed seat {tuple(coord)} out of bounds")
            if coord in taken:
                raise ValidationError(f"observed seat {tuple(coord)} occupied twice")
            taken.add(coord)


def serialize_scenario(scenario: Scenario) -> str:
    """Canonical text for a scenario; ``parse_scenario`` inverts it exactly."""
    validate_scenario(scenario)
    grid = Auditorium(scenario.rows, scenario.cols, scenario.initial_occupancy)
    lines = [f"rows {scenario.rows}", f"cols {scenario.cols}", "grid"]
    lines.extend(grid.to_rows())
    lines.append("arrivals")
    if scenario.arrivals:
        lines.append(" ".join(str(size) for size in scenario.arrivals))
    if scenario.observed is not None:
        lines.append("observed")
        for index, seats in enumerate(scenario.observed, start=1):
            coords = " ".join(f"{c.row},{c.seat}" for c in seats)
            lines.append(f"{index}: {coords}" if coords else f"{index}:")
    return "\n".join(lines) + "\n"


def parse_choices(text: str) -> list[ChoiceRecord]:
    """Parse the blank-line separated choices format into records."""
    blocks: list[list[tuple[int, str]]] = []
    block: list[tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            if block:
                blocks.append(block)
                block = []
            continue
        if line.lstrip().startswith(";"):
            continue
        block.append((number, line))
    if block:
        blocks.append(block)

    records = []
    for lines in blocks:
        records.append(_parse_choice_block(lines))
    return records


def _parse_choice_block(lines: list[tuple[int, str]]) -> ChoiceRecord:
    if len(lines) < 4:
        raise ParseError(
            lines[0][0], 1, "record needs 'groups', 'grid', grid rows and 'chosen'"
        )
    line, text = lines[0]
    parts = text.split()
    if len(parts) != 2 or parts[0] != "groups":
        raise ParseError(line, 1, f"expected 'groups <k>', got {text!r}")
    group_count = _parse_int(parts[1], line, text.index(parts[1]) + 1, "groups")

    line, text = lines[1]
    if text.strip() != "grid":
        raise ParseError(line, 1, f"expected 'grid', got {text!r}")

    *grid_lines, (chosen_line, chosen_text) = lines[2:]
    if not grid_lines:
        raise ParseError(chosen_line, 1, "record has no grid rows")
    cols = len(grid_lines[0][1])
    rows: list[str] = []
    for r, (number, row_text) in enumerate(grid_lines, start=1):
        if len(row_text) != cols:
            raise ParseError(
                number, min(len(row_text), cols) + 1,
                f"grid row {r} has {len(row_text)} characters, expected {cols}",
            )
        for s, ch in enumerate(row_text, start=1):
            if ch not in ".#":
                raise ParseError(number, s, f"bad grid character {ch!r}, expected '.' or '#'")
        rows.append(row_text)

    parts = chosen_text.split()
    if len(parts) != 2 or parts[0] != "chosen":
        raise ParseError(chosen_line, 1, f"expected 'chosen row,seat', got {chosen_text!r}")
    chosen = _parse_coord(parts[1], chosen_line, chosen_text.index(parts[1]) + 1)

    configuration = Auditorium.from_rows(rows)
    if not (1 <= chosen.row <= configuration.rows and 1 <= chosen.seat <= configuration.cols):
        raise ValidationError(
            f"line {chosen_line}: chosen seat {tuple(chosen)} outside the "
            f"{configuration.rows}x{configuration.cols} grid"
        )
    try:
        return ChoiceRecord(configuration=configuration, chosen=chosen, group_count=group_count)
    except ValueError as exc:
        raise ValidationError(f"line {lines[0][0]}: {exc}") from None


def _format_number(x: float) -> str:
    if isinstance(x, int):
        return str(x)
    return str(int(x)) if x.is_integer() else repr(x)


def emit_trajectories_csv(
    named: Sequence[tuple[str, MeanTrajectory | Sequence[int]]],
) -> str:
    """Render labeled trajectories as ``step,label,mean,std,min,max`` CSV.

    Rows are ordered by step then label; numbers keep full precision with
    no locale formatting, so identical inputs yield identical bytes.
    """
    table = []
    for label, traj in named:
        if isinstance(traj, MeanTrajectory):
            table.append((label, traj.mean, traj.std, traj.min, traj.max))
        else:
            values = list(traj)
            zeros = [0] * len(values)
            table.append((label, values, zeros, values, values))
    lengths = {len(mean) for _, mean, _, _, _ in table}
    if len(lengths) > 1:
        raise LengthMismatch(
            f"trajectories disagree on step count: {sorted(lengths)}"
        )
    lines = ["step,label,mean,std,min,max"]
    steps = lengths.pop() if lengths else 0
    for step in range(steps):
        for label, mean, std, low, high in sorted(table, key=lambda row: row[0]):
            lines.append(
                f"{step},{label},{_format_number(mean[step])},"
                f"{_format_number(std[step])},{_format_number(low[step])},"
                f"{_format_number(high[step])}"
            )
    return "\n".join(lines) + "\n"
