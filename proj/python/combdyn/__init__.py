"""Periods, patterns, forcing and rotation numbers of one-dimensional maps."""

from combdyn._core import (
    DomainError,
    NonConvergence,
    Pattern,
    circle_period_set,
    double_pattern,
    enumerate_circle_cycles,
    enumerate_patterns,
    forced_cycles,
    forces,
    forcing_poset,
    initial_segment,
    is_primary,
    is_twist_up_to,
    min_entropy_search,
    orp_compare,
    over_rotation_number,
    over_rotation_pair,
    over_rotation_spectrum,
    pattern_entropy,
    periods,
    poset_dot,
    realizing_pattern,
    rotation_interval,
    sharkovsky_compare,
    stefan_pattern,
)

__all__ = [name for name in dir() if not name.startswith("_")]
