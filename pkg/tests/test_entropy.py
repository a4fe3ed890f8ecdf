from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from seatsim import Auditorium, Placement, RowOutOfRange, entropy, row_transitions
from support import entropy_bf, mirrored, occupied_cells, random_auditorium


def test_fully_occupied_row_scores_zero():
    assert entropy(Auditorium.from_rows(["#" * 14])) == 0


def test_alternating_row_of_14_scores_169():
    aud = Auditorium.from_rows(["#." * 7])
    assert row_transitions(aud, 1) == 13
    assert entropy(aud) == 169


def test_empty_row_scores_zero():
    aud = Auditorium.from_rows(["." * 14])
    assert row_transitions(aud, 1) == 0
    assert entropy(aud) == 0


def test_two_row_hand_example():
    assert entropy(Auditorium.from_rows(["#.#", "..."])) == 4


def test_row_out_of_range():
    aud = Auditorium(2, 3)
    for bad in (0, 3, -1):
        with pytest.raises(RowOutOfRange):
            row_transitions(aud, bad)


def test_matches_brute_force_on_random_grids():
    rng = random.Random(17)
    for _ in range(100):
        aud = random_auditorium(rng, max_density=1.0)
        assert entropy(aud) == entropy_bf(aud)


@st.composite
def small_grids(draw):
    rows = draw(st.integers(1, 7))
    cols = draw(st.integers(1, 14))
    flags = draw(st.lists(st.booleans(), min_size=rows * cols, max_size=rows * cols))
    occupied = [
        (r, s)
        for r in range(1, rows + 1)
        for s in range(1, cols + 1)
        if flags[(r - 1) * cols + (s - 1)]
    ]
    return Auditorium(rows, cols, occupied)


@given(small_grids())
def test_bounds_and_symmetries(aud):
    score = entropy(aud)
    assert 0 <= score <= aud.rows * (aud.cols - 1) ** 2
    assert entropy(mirrored(aud)) == score
    shuffled = Auditorium(
        aud.rows,
        aud.cols,
        [
            ((c.row % aud.rows) + 1, c.seat)  # cyclic row permutation
            for c in occupied_cells(aud)
        ],
    )
    assert entropy(shuffled) == score


def test_extremes_score_zero():
    assert entropy(Auditorium(7, 14)) == 0
    full = Auditorium.from_rows(["#" * 14] * 7)
    assert entropy(full) == 0


def test_upper_bound_attained_only_by_alternating_grid():
    bound = 7 * 13 * 13
    for phase in ("#.", ".#"):
        alternating = Auditorium.from_rows([(phase * 7)[:14]] * 7)
        assert entropy(alternating) == bound
    rng = random.Random(23)
    for _ in range(200):
        aud = random_auditorium(rng, max_rows=7, max_cols=14, max_density=1.0)
        if entropy(aud) == aud.rows * (aud.cols - 1) ** 2 and aud.cols > 1:
            for r in range(1, aud.rows + 1):
                flags = list(aud.row_occupancy(r))
                assert all(flags[i] != flags[i + 1] for i in range(len(flags) - 1))


def test_single_seat_addition_changes_one_row_by_bounded_amount():
    rng = random.Random(41)
    for _ in range(300):
        aud = random_auditorium(rng, max_density=0.8)
        empties = [
            (r, s)
            for r in range(1, aud.rows + 1)
            for s in range(1, aud.cols + 1)
            if not aud.is_occupied(r, s)
        ]
        if not empties:
            continue
        row, seat = empties[rng.randrange(len(empties))]
        before_row = row_transitions(aud, row)
        before = entropy(aud)
        aud.occupy(Placement(row, seat, 1))
        after_row = row_transitions(aud, row)
        assert abs(after_row - before_row) <= 2
        assert entropy(aud) - before == after_row**2 - before_row**2
        assert abs(entropy(aud) - before) <= (before_row + 2) ** 2 - before_row**2
