"""Histogram analyses of individual seat choices.

Each record pairs a partially seated auditorium with the single seat a
respondent picked for it. Two distance summaries are supported: distance
to the nearest seated person, and distance to the occupants' center of
mass (the latter restricted to configurations with enough distinct seated
groups for a center to be meaningful). Histograms hold raw counts;
percentages are left to consumers so the output stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Auditorium, SeatCoord, manhattan_distance


class EmptyInput(Exception):
    """No records were supplied."""


class AllRecordsFiltered(Exception):
    """The group-count filter removed every record."""


@dataclass
class ChoiceRecord:
    """One questionnaire answer: configuration shown, seat picked."""

    configuration: Auditorium
    chosen: SeatCoord
    group_count: int

    def __post_init__(self) -> None:
        self.chosen = SeatCoord(*self.chosen)
        if self.group_count < 1:
            raise ValueError(f"group_count must be >= 1, got {self.group_count}")
        if self.configuration.occupied_count == 0:
            raise ValueError("configuration has nobody seated")
        if self.configuration.is_occupied(*self.chosen):
            raise ValueError(f"chosen seat {tuple(self.chosen)} is already occupied")


@dataclass
class Histogram:
    """Occurrence counts keyed by integer distance."""

    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _tally(distances: list[int]) -> Histogram:
    counts: dict[int, int] = {}
    for d in distances:
        counts[d] = counts.get(d, 0) + 1
    return Histogram(counts)


def nearest_distance_histogram(records: list[ChoiceRecord]) -> Histogram:
    """Bin each record's distance from the chosen seat to the nearest occupant."""
    if not records:
        raise EmptyInput("no choice records")
    return _tally(
        [
            min(
                manhattan_distance(rec.chosen, occ)
                for occ in rec.configuration.occupied_seats()
            )
            for rec in records
        ]
    )


def center_distance_histogram(
    records: list[ChoiceRecord], min_groups: int = 2
) -> Histogram:
    """Bin distances from the chosen seat to the occupants' center of mass.

    Records with fewer than ``min_groups`` distinct seated groups are
    dropped first; a center of mass says little when a single group is
    seated.
    """
    if not records:
        raise EmptyInput("no choice records")
    kept = [rec for rec in records if rec.group_count >= min_groups]
    if not kept:
        raise AllRecordsFiltered(
            f"no record has at least {min_groups} seated groups"
        )
    distances = []
    for rec in kept:
        center = rec.configuration.center_of_mass()
        assert center is not None  # occupied_count >= 1 is checked on construction
        distances.append(manhattan_distance(rec.chosen, center))
    return _tally(distances)
