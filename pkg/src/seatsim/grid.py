"""Occupancy-grid geometry for a rectangular auditorium.

Rows are numbered 1..rows starting from the back of the hall, seats
1..cols from left to right. An arriving group claims a contiguous
horizontal run of seats in a single row (a :class:`Placement`).
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence


class SeatConflict(Exception):
    """An already occupied seat would be occupied a second time."""


class SeatCoord(NamedTuple):
    row: int
    seat: int


class Placement(NamedTuple):
    """A run of ``size`` seats in ``row`` starting at ``start_seat``."""

    row: int
    start_seat: int
    size: int

    def seats(self) -> tuple[SeatCoord, ...]:
        """All seats covered by the placement, left to right."""
        return tuple(
            SeatCoord(self.row, s)
            for s in range(self.start_seat, self.start_seat + self.size)
        )

    def min_distance_to(self, coord: SeatCoord) -> int:
        """Smallest Manhattan distance from any covered seat to ``coord``.

        Equivalent to ``min(manhattan_distance(s, coord) for s in seats())``;
        computed in closed form as point-to-interval distance.
        """
        vertical = abs(self.row - coord.row)
        last = self.start_seat + self.size - 1
        if coord.seat < self.start_seat:
            return vertical + self.start_seat - coord.seat
        if coord.seat > last:
            return vertical + coord.seat - last
        return vertical


def manhattan_distance(p: SeatCoord, q: SeatCoord) -> int:
    """|row difference| + |seat difference| between two seats."""
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


def _round_half_up_ratio(numerator: int, denominator: int) -> int:
    # round(numerator/denominator) with ties going up; exact for the
    # non-negative integers that occur here.
    return (2 * numerator + denominator) // (2 * denominator)


class Auditorium:
    """Mutable rows x cols grid of occupied/empty seats.

    ``occupy``/``occupy_seats`` are the only mutators and only ever flip
    seats from empty to occupied. Nearest-occupied distances and feasible
    placements are cached lazily and rebuilt after each mutation, so
    repeated queries against an unchanged grid are cheap.
    """

    def __init__(
        self,
        rows: int,
        cols: int,
        occupied: Iterable[tuple[int, int]] = (),
    ) -> None:
        if rows < 1 or cols < 1:
            raise ValueError(f"auditorium must be at least 1x1, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._occ: list[list[bool]] = [[False] * cols for _ in range(rows)]
        self._count = 0
        self._row_sum = 0
        self._seat_sum = 0
        self._cell_dist: list[list[float]] | None = None
        self._feasible: dict[int, tuple[Placement, ...]] = {}
        self._pl_dist: dict[int, tuple[tuple[Placement, float], ...]] = {}
        for coord in occupied:
            self._set_occupied(SeatCoord(*coord))

    @classmethod
    def from_rows(cls, lines: Sequence[str]) -> Auditorium:
        """Build from strings of ``.`` (empty) and ``#`` (occupied)."""
        if not lines:
            raise ValueError("need at least one row")
        cols = len(lines[0])
        aud = cls(len(lines), cols)
        for r, line in enumerate(lines, start=1):
            if len(line) != cols:
                raise ValueError(f"row {r} has length {len(line)}, expected {cols}")
            for s, ch in enumerate(line, start=1):
                if ch == "#":
                    aud._set_occupied(SeatCoord(r, s))
                elif ch != ".":
                    raise ValueError(f"bad grid character {ch!r} in row {r}")
        return aud

    def to_rows(self) -> list[str]:
        """Inverse of :meth:`from_rows`."""
        return ["".join("#" if c else "." for c in row) for row in self._occ]

    def copy(self) -> Auditorium:
        dup = Auditorium(self.rows, self.cols)
        dup._occ = [row[:] for row in self._occ]
        dup._count = self._count
        dup._row_sum = self._row_sum
        dup._seat_sum = self._seat_sum
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Auditorium):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._occ == other._occ
        )

    def __repr__(self) -> str:
        return (
            f"Auditorium({self.rows}x{self.cols}, "
            f"{self._count}/{self.rows * self.cols} occupied)"
        )

    def _check_bounds(self, row: int, seat: int) -> None:
        if not (1 <= row <= self.rows and 1 <= seat <= self.cols):
            raise ValueError(
                f"seat ({row},{seat}) outside {self.rows}x{self.cols} auditorium"
            )

    def is_occupied(self, row: int, seat: int) -> bool:
        self._check_bounds(row, seat)
        return self._occ[row - 1][seat - 1]

    @property
    def occupied_count(self) -> int:
        return self._count

    def occupied_seats(self) -> list[SeatCoord]:
        """All occupied seats in row-major order."""
        return [
            SeatCoord(r, s)
            for r, row in enumerate(self._occ, start=1)
            for s, occ in enumerate(row, start=1)
            if occ
        ]

    def row_occupancy(self, row: int) -> Sequence[bool]:
        """Occupancy flags of one row (internal list; do not mutate)."""
        self._check_bounds(row, 1)
        return self._occ[row - 1]

    def _invalidate(self) -> None:
        self._cell_dist = None
        self._feasible.clear()
        self._pl_dist.clear()

    def _set_occupied(self, coord: SeatCoord) -> None:
        self._check_bounds(coord.row, coord.seat)
        if self._occ[coord.row - 1][coord.seat - 1]:
            raise SeatConflict(f"seat ({coord.row},{coord.seat}) is already occupied")
        self._occ[coord.row - 1][coord.seat - 1] = True
        self._count += 1
        self._row_sum += coord.row
        self._seat_sum += coord.seat
        self._invalidate()

    def occupy(self, placement: Placement) -> None:
        """Seat a group on ``placement``; every covered seat must be empty.

        Raises :class:`SeatConflict` (leaving the grid unchanged) if any
        covered seat is already taken; a conflict here means the caller
        selected an infeasible placement.
        """
        covered = placement.seats()
        for coord in covered:
            self._check_bounds(coord.row, coord.seat)
            if self._occ[coord.row - 1][coord.seat - 1]:
                raise SeatConflict(
                    f"seat ({coord.row},{coord.seat}) is already occupied"
                )
        for coord in covered:
            self._set_occupied(coord)

    def occupy_seats(self, coords: Iterable[tuple[int, int]]) -> None:
        """Occupy arbitrary seats (used when replaying recorded placements)."""
        staged = [SeatCoord(*c) for c in coords]
        seen: set[SeatCoord] = set()
        for coord in staged:
            self._check_bounds(coord.row, coord.seat)
            if coord in seen or self._occ[coord.row - 1][coord.seat - 1]:
                raise SeatConflict(
                    f"seat ({coord.row},{coord.seat}) is already occupied"
                )
            seen.add(coord)
        for coord in staged:
            self._set_occupied(coord)

    def feasible_placements(self, size: int) -> tuple[Placement, ...]:
        """Every placement of ``size`` seats whose run is entirely empty.

        Row-major order by (row, start_seat), so index-based random choice
        is reproducible. Empty tuple when the group cannot fit anywhere.
        """
        if size < 1:
            raise ValueError(f"group size must be positive, got {size}")
        cached = self._feasible.get(size)
        if cached is None:
            found: list[Placement] = []
            for r, row in enumerate(self._occ, start=1):
                run = 0
                for s, occ in enumerate(row, start=1):
                    run = 0 if occ else run + 1
                    if run >= size:
                        found.append(Placement(r, s - size + 1, size))
            cached = self._feasible[size] = tuple(found)
        return cached

    def _cell_distances(self) -> list[list[float]]:
        # Manhattan distance from each cell to the nearest occupied cell,
        # via the exact two-pass chamfer sweep; inf everywhere when the
        # grid is empty.
        if self._cell_dist is not None:
            return self._cell_dist
        rows, cols = self.rows, self.cols
        inf = math.inf
        dist: list[list[float]] = [[inf] * cols for _ in range(rows)]
        for r in range(rows):
            drow, orow = dist[r], self._occ[r]
            up = dist[r - 1] if r else None
            for c in range(cols):
                if orow[c]:
                    drow[c] = 0
                    continue
                d = up[c] + 1 if up is not None else inf
                if c and drow[c - 1] + 1 < d:
                    d = drow[c - 1] + 1
                drow[c] = d
        for r in range(rows - 1, -1, -1):
            drow = dist[r]
            down = dist[r + 1] if r + 1 < rows else None
            for c in range(cols - 1, -1, -1):
                d = drow[c]
                if down is not None and down[c] + 1 < d:
                    d = down[c] + 1
                if c + 1 < cols and drow[c + 1] + 1 < d:
                    d = drow[c + 1] + 1
                drow[c] = d
        self._cell_dist = dist
        return dist

    def min_distance_to_seated(self, placement: Placement) -> float:
        """Smallest Manhattan distance from the placement to any occupant.

        ``math.inf`` when nobody is seated yet; that value compares above
        every integer distance, so lower-bound filters accept it naturally.
        """
        last = placement.start_seat + placement.size - 1
        self._check_bounds(placement.row, placement.start_seat)
        self._check_bounds(placement.row, last)
        drow = self._cell_distances()[placement.row - 1]
        return min(drow[placement.start_seat - 1 : last])

    def placements_with_distances(
        self, size: int
    ) -> tuple[tuple[Placement, float], ...]:
        """Feasible placements paired with their nearest-occupied distance."""
        cached = self._pl_dist.get(size)
        if cached is None:
            dist = self._cell_distances()
            pairs = []
            for pl in self.feasible_placements(size):
                drow = dist[pl.row - 1]
                lo = pl.start_seat - 1
                pairs.append((pl, min(drow[lo : lo + pl.size])))
            cached = self._pl_dist[size] = tuple(pairs)
        return cached

    def center_of_mass(self) -> SeatCoord | None:
        """Mean occupied row and seat, each rounded half-up; None if empty."""
        if self._count == 0:
            return None
        return SeatCoord(
            _round_half_up_ratio(self._row_sum, self._count),
            _round_half_up_ratio(self._seat_sum, self._count),
        )
