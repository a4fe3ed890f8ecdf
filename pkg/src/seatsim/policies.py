"""Seat-selection rules for arriving groups.

Five rules, each addressed by a lowercase keyword (``random``, ``max``,
``space``, ``simple``, ``center``). A rule maps (auditorium, group size,
rng) to one feasible placement; groups are greedy and never move again.
Randomness is consumed only to choose uniformly among equally good
placements, as ``options[rng.randrange(len(options))]`` over the
deterministic row-major candidate order, so a fixed seed fixes the choice.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence, TypeVar

from .grid import Auditorium, Placement

#: Deterministic pseudo-random stream; construct one per simulation run.
RandomSource = random.Random

T = TypeVar("T")


class NoFeasiblePlacement(Exception):
    """The group cannot be seated anywhere; scenarios must not get here."""

    def __init__(self, message: str, step: int | None = None, run: int | None = None):
        super().__init__(message)
        self.step = step
        self.run = run


def _pick(rng: RandomSource, options: Sequence[T]) -> T:
    return options[rng.randrange(len(options))]


def _feasible_or_raise(aud: Auditorium, size: int) -> Sequence[Placement]:
    placements = aud.feasible_placements(size)
    if not placements:
        raise NoFeasiblePlacement(f"no room anywhere for a group of {size}")
    return placements


def select_random(aud: Auditorium, size: int, rng: RandomSource) -> Placement:
    """Uniform choice over every feasible placement."""
    return _pick(rng, _feasible_or_raise(aud, size))


def select_max(aud: Auditorium, size: int, rng: RandomSource) -> Placement:
    """Maximize the minimum Manhattan distance to the people already seated.

    The distance of a placement is the smallest distance over its member
    seats. In an empty auditorium every placement ties at infinity.
    """
    _feasible_or_raise(aud, size)
    pairs = aud.placements_with_distances(size)
    best = max(d for _, d in pairs)
    return _pick(rng, [pl for pl, d in pairs if d == best])


def select_space(aud: Auditorium, size: int, rng: RandomSource) -> Placement:
    """Seek a nearest-occupied distance between 2 and 4 inclusive.

    If no placement falls in that band, take the smallest available
    distance above 4 (an empty auditorium lands here, everything tying at
    infinity); if every placement is closer than 2, settle for any free
    spot.
    """
    _feasible_or_raise(aud, size)
    pairs = aud.placements_with_distances(size)
    banded = [pl for pl, d in pairs if 2 <= d <= 4]
    if banded:
        return _pick(rng, banded)
    above = [(pl, d) for pl, d in pairs if d > 4]
    if above:
        nearest = min(d for _, d in above)
        return _pick(rng, [pl for pl, d in above if d == nearest])
    return _pick(rng, [pl for pl, _ in pairs])


def select_simple(aud: Auditorium, size: int, rng: RandomSource) -> Placement:
    """Uniform choice among placements with nearest-occupied distance > 2.

    Falls back to a uniform choice over all feasible placements when no
    spot keeps that much room.
    """
    _feasible_or_raise(aud, size)
    pairs = aud.placements_with_distances(size)
    roomy = [pl for pl, d in pairs if d > 2]
    if roomy:
        return _pick(rng, roomy)
    return _pick(rng, [pl for pl, _ in pairs])


def select_center(aud: Auditorium, size: int, rng: RandomSource) -> Placement:
    """Among placements with distance >= 2, sit closest to the center of mass.

    Candidate placements keep a nearest-occupied distance of at least 2;
    among them the ones nearest the occupants' center of mass (placement
    distance measured over member seats) tie for the choice. With no
    candidates the group sits anywhere; with nobody seated yet there is no
    center and all candidates tie.
    """
    _feasible_or_raise(aud, size)
    pairs = aud.placements_with_distances(size)
    candidates = [pl for pl, d in pairs if d >= 2]
    if not candidates:
        return _pick(rng, [pl for pl, _ in pairs])
    center = aud.center_of_mass()
    if center is None:
        return _pick(rng, candidates)
    closest = min(pl.min_distance_to(center) for pl in candidates)
    return _pick(rng, [pl for pl in candidates if pl.min_distance_to(center) == closest])


POLICIES: dict[str, Callable[[Auditorium, int, RandomSource], Placement]] = {
    "random": select_random,
    "max": select_max,
    "space": select_space,
    "simple": select_simple,
    "center": select_center,
}

POLICY_NAMES: tuple[str, ...] = tuple(POLICIES)


def select_placement(
    policy: str, aud: Auditorium, size: int, rng: RandomSource
) -> Placement:
    """Dispatch to the named rule; ``policy`` is one of POLICY_NAMES."""
    try:
        rule = POLICIES[policy]
    except KeyError:
        raise ValueError(
            f"unknown policy {policy!r}; expected one of {', '.join(POLICIES)}"
        ) from None
    return rule(aud, size, rng)
