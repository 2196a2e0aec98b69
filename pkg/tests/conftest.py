"""Shared fixtures and config factories for the test suite."""

from __future__ import annotations

from dataclasses import replace

import pytest

from tweetsim import (FixedParams, GridCoord, SimulationConfig, VariableParams,
                      scenario_config)

VIRG = VariableParams(tweet_chance=0.33, event_duration=31,
                      event_tweet_chance=0.49, night_tweet_chance=0.17,
                      night_duration=8, ndist=0.07)


def routine_config(people: int = 1000, total_ticks: int = 200,
                   tweet_chance: float = 0.33, seed: int = 0,
                   **fixed_overrides) -> SimulationConfig:
    """Routine traffic only: no event, no night window, retweets disabled."""
    fixed = replace(FixedParams(), people=people, user_interest=0,
                    event_interest=0, night_mode=False, **fixed_overrides)
    variable = replace(VIRG, tweet_chance=tweet_chance)
    return SimulationConfig(fixed=fixed, variable=variable, seed=seed,
                            total_ticks=total_ticks)


def small_event_config(seed: int = 0, people: int = 40, total_ticks: int = 16,
                       event_tick: int = 4, **kwargs) -> SimulationConfig:
    """A tiny but fully featured world for fast behavioral tests."""
    fixed_overrides = dict(people=people, world_half_extent=8, probability=0.3,
                           num_clusters=2, user_interest=2, event_interest=2,
                           step=2)
    fixed_overrides.update(kwargs.pop("fixed", {}))
    fixed = replace(FixedParams(), **fixed_overrides)
    variable = replace(VIRG, event_duration=5, **kwargs.pop("variable", {}))
    return SimulationConfig(
        fixed=fixed, variable=variable, seed=seed, total_ticks=total_ticks,
        event_tick=event_tick, event_location=GridCoord(1, 2),
        sensor_location=GridCoord(0, 0), sensor_max_radius=8.0, **kwargs)


@pytest.fixture
def virg_config():
    return scenario_config("virginia_beach", seed=1)
