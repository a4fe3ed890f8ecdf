"""Seat-choice simulator for rectangular auditoriums.

Groups arrive one per time step and pick a contiguous run of empty seats
in a row under one of five selection rules; the entropy of the seating
pattern is tracked after every arrival and can be averaged over many
seeded runs or compared against recorded real placements.
"""

from .analysis import (
    AllRecordsFiltered,
    ChoiceRecord,
    EmptyInput,
    Histogram,
    center_distance_histogram,
    nearest_distance_histogram,
)
from .entropy import RowOutOfRange, entropy, row_transitions
from .grid import (
    Auditorium,
    Placement,
    SeatConflict,
    SeatCoord,
    manhattan_distance,
)
from .policies import (
    POLICIES,
    POLICY_NAMES,
    NoFeasiblePlacement,
    RandomSource,
    select_center,
    select_max,
    select_placement,
    select_random,
    select_simple,
    select_space,
)
from .scenario_io import (
    LengthMismatch,
    ParseError,
    ValidationError,
    emit_trajectories_csv,
    parse_choices,
    parse_scenario,
    serialize_scenario,
    validate_scenario,
)
from .simulation import (
    MeanTrajectory,
    MissingObservedData,
    Scenario,
    Trajectory,
    derive_seed,
    replay_observed,
    run_many,
    run_once,
)

__all__ = [
    "AllRecordsFiltered",
    "Auditorium",
    "ChoiceRecord",
    "EmptyInput",
    "Histogram",
    "LengthMismatch",
    "MeanTrajectory",
    "MissingObservedData",
    "NoFeasiblePlacement",
    "POLICIES",
    "POLICY_NAMES",
    "ParseError",
    "Placement",
    "RandomSource",
    "RowOutOfRange",
    "Scenario",
    "SeatConflict",
    "SeatCoord",
    "Trajectory",
    "ValidationError",
    "center_distance_histogram",
    "derive_seed",
    "emit_trajectories_csv",
    "entropy",
    "manhattan_distance",
    "nearest_distance_histogram",
    "parse_choices",
    "parse_scenario",
    "replay_observed",
    "row_transitions",
    "run_many",
    "run_once",
    "select_center",
    "select_max",
    "select_placement",
    "select_random",
    "select_simple",
    "select_space",
    "serialize_scenario",
    "validate_scenario",
]
