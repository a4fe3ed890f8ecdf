"""Brute-force reference implementations and generators shared by the tests.

Everything here recomputes results from first principles through the
narrow ``is_occupied``/``rows``/``cols`` surface, deliberately avoiding
the library's cached placement and distance machinery, so that agreement
between the two is meaningful.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from seatsim import Auditorium, Placement, SeatCoord


def occupied_cells(aud: Auditorium) -> list[SeatCoord]:
    return [
        SeatCoord(r, s)
        for r in range(1, aud.rows + 1)
        for s in range(1, aud.cols + 1)
        if aud.is_occupied(r, s)
    ]


def feasible_placements_bf(aud: Auditorium, size: int) -> list[Placement]:
    found = []
    for r in range(1, aud.rows + 1):
        for start in range(1, aud.cols - size + 2):
            if all(not aud.is_occupied(r, s) for s in range(start, start + size)):
                found.append(Placement(r, start, size))
    return found


def min_distance_bf(aud: Auditorium, placement: Placement) -> float:
    seated = occupied_cells(aud)
    if not seated:
        return math.inf
    return min(
        abs(sr - qr) + abs(ss - qs)
        for sr, ss in placement.seats()
        for qr, qs in seated
    )


def center_of_mass_bf(aud: Auditorium) -> SeatCoord | None:
    seated = occupied_cells(aud)
    if not seated:
        return None

    def round_half_up(x: Fraction) -> int:
        return math.floor(x + Fraction(1, 2))

    n = len(seated)
    return SeatCoord(
        round_half_up(Fraction(sum(c.row for c in seated), n)),
        round_half_up(Fraction(sum(c.seat for c in seated), n)),
    )


def entropy_bf(aud: Auditorium) -> int:
    total = 0
    for r in range(1, aud.rows + 1):
        flips = sum(
            1
            for s in range(2, aud.cols + 1)
            if aud.is_occupied(r, s) != aud.is_occupied(r, s - 1)
        )
        total += flips * flips
    return total


def placement_point_distance_bf(placement: Placement, coord: SeatCoord) -> int:
    return min(
        abs(sr - coord.row) + abs(ss - coord.seat) for sr, ss in placement.seats()
    )


def policy_candidates_bf(policy: str, aud: Auditorium, size: int) -> set[Placement]:
    """The exact set of placements the named policy may return."""
    pairs = [(pl, min_distance_bf(aud, pl)) for pl in feasible_placements_bf(aud, size)]
    everything = {pl for pl, _ in pairs}
    if not pairs:
        return set()
    if policy == "random":
        return everything
    if policy == "max":
        best = max(d for _, d in pairs)
        return {pl for pl, d in pairs if d == best}
    if policy == "space":
        banded = {pl for pl, d in pairs if 2 <= d <= 4}
        if banded:
            return banded
        above = [(pl, d) for pl, d in pairs if d > 4]
        if above:
            nearest = min(d for _, d in above)
            return {pl for pl, d in above if d == nearest}
        return everything
    if policy == "simple":
        roomy = {pl for pl, d in pairs if d > 2}
        return roomy or everything
    if policy == "center":
        candidates = [pl for pl, d in pairs if d >= 2]
        if not candidates:
            return everything
        center = center_of_mass_bf(aud)
        if center is None:
            return set(candidates)
        closest = min(placement_point_distance_bf(pl, center) for pl in candidates)
        return {
            pl
            for pl in candidates
            if placement_point_distance_bf(pl, center) == closest
        }
    raise ValueError(f"unknown policy {policy!r}")


def coverage_draws(set_size: int, floor: int = 500, miss_probability: float = 1e-9) -> int:
    """Draws needed so a uniform sample almost surely touches every candidate.

    Union bound: set_size * (1 - 1/set_size)**n < miss_probability.
    """
    if set_size <= 1:
        return floor
    needed = math.ceil(
        math.log(miss_probability / set_size) / math.log(1 - 1 / set_size)
    )
    return max(floor, needed)


def random_auditorium(
    rng: random.Random,
    max_rows: int = 7,
    max_cols: int = 14,
    max_density: float = 0.6,
) -> Auditorium:
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    density = rng.uniform(0.0, max_density)
    occupied = [
        (r, s)
        for r in range(1, rows + 1)
        for s in range(1, cols + 1)
        if rng.random() < density
    ]
    return Auditorium(rows, cols, occupied)


def mirrored(aud: Auditorium) -> Auditorium:
    return Auditorium(
        aud.rows,
        aud.cols,
        [(c.row, aud.cols + 1 - c.seat) for c in occupied_cells(aud)],
    )


def mirror_placement(placement: Placement, cols: int) -> Placement:
    last = placement.start_seat + placement.size - 1
    return Placement(placement.row, cols + 1 - last, placement.size)


# Malformed scenario documents and the error each must raise, shared by the
# parser unit tests and the acceptance gate.
VALID_MINIMAL = "rows 1\ncols 3\ngrid\n.#.\narrivals\n"

MALFORMED_SCENARIOS: list[tuple[str, str, str]] = [
    ("empty file", "", "ParseError"),
    ("missing rows keyword", "cols 3\n", "ParseError"),
    ("rows value not integer", "rows x\ncols 3\ngrid\n...\narrivals\n", "ParseError"),
    ("rows missing value", "rows\ncols 3\ngrid\n...\narrivals\n", "ParseError"),
    ("rows extra token", "rows 1 2\ncols 3\ngrid\n...\narrivals\n", "ParseError"),
    ("missing cols", "rows 1\ngrid\n...\narrivals\n", "ParseError"),
    ("missing grid keyword", "rows 1\ncols 3\n.#.\narrivals\n", "ParseError"),
    ("grid row too short", "rows 1\ncols 3\ngrid\n..\narrivals\n", "ParseError"),
    ("grid row too long", "rows 1\ncols 3\ngrid\n....\narrivals\n", "ParseError"),
    ("bad grid character", "rows 1\ncols 3\ngrid\n.x.\narrivals\n", "ParseError"),
    ("missing grid row", "rows 2\ncols 3\ngrid\n...\narrivals\n", "ParseError"),
    ("missing arrivals keyword", "rows 1\ncols 3\ngrid\n...\n", "ParseError"),
    ("arrival size not integer", "rows 1\ncols 3\ngrid\n...\narrivals\na\n", "ParseError"),
    ("trailing junk", VALID_MINIMAL + "junk\n", "ParseError"),
    ("observed step malformed", "rows 1\ncols 3\ngrid\n...\narrivals\n1\nobserved\nno colon\n", "ParseError"),
    ("observed coord malformed", "rows 1\ncols 3\ngrid\n...\narrivals\n1\nobserved\n1: 1;2\n", "ParseError"),
    ("zero rows", "rows 0\ncols 3\ngrid\narrivals\n", "ValidationError"),
    ("zero group size", "rows 1\ncols 3\ngrid\n...\narrivals\n0\n", "ValidationError"),
    ("observed duplicates initial seat", "rows 1\ncols 3\ngrid\n.#.\narrivals\n1\nobserved\n1: 1,2\n", "ValidationError"),
    ("observed seat out of bounds", "rows 1\ncols 3\ngrid\n...\narrivals\n1\nobserved\n1: 1,4\n", "ValidationError"),
    ("observed step out of order", "rows 1\ncols 3\ngrid\n...\narrivals\n1 1\nobserved\n2: 1,1\n1: 1,2\n", "ValidationError"),
    ("observed size mismatch", "rows 1\ncols 3\ngrid\n...\narrivals\n2\nobserved\n1: 1,1\n", "ValidationError"),
    ("observed steps missing", "rows 1\ncols 4\ngrid\n....\narrivals\n1 1\nobserved\n1: 1,1\n", "ValidationError"),
    ("observed seat repeated across steps", "rows 1\ncols 4\ngrid\n....\narrivals\n1 1\nobserved\n1: 1,1\n2: 1,1\n", "ValidationError"),
]
