"""Config schema: validation, defaults, round-trips, night window math."""

from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tweetsim import (ConfigError, CountSeries, FixedParams, GridCoord,
                      NetworkModel, SimulationConfig, VariableParams,
                      config_from_dict, config_to_dict, is_night, night_mask,
                      scenario_config, validate_config)
from tweetsim.core import CONFIG_KEYS

from conftest import VIRG


def test_virg_column_is_valid():
    cfg = scenario_config("virginia_beach")
    assert validate_config(cfg) is cfg
    assert cfg.variable == VariableParams(0.33, 31, 0.49, 0.17, 8, 0.07)


def test_out_of_range_probability_names_field():
    cfg = scenario_config("virginia_beach")
    bad = replace(cfg, fixed=replace(cfg.fixed, probability=1.5))
    with pytest.raises(ConfigError) as err:
        validate_config(bad)
    assert err.value.field == "probability"
    assert "probability" in str(err.value)


def test_zero_clustering_fraction_with_clusters_on_is_valid():
    cfg = scenario_config("virginia_beach")
    ok = replace(cfg, fixed=replace(cfg.fixed, percentage_clustering=0.0,
                                    cluster=True))
    validate_config(ok)


@pytest.mark.parametrize("mutate, field", [
    (lambda c: replace(c, event_tick=c.total_ticks), "event_tick"),
    (lambda c: replace(c, event_tick=-1), "event_tick"),
    (lambda c: replace(c, event_location=GridCoord(999, 0)), "event_location"),
    (lambda c: replace(c, sensor_location=GridCoord(0, -999)), "sensor_location"),
    (lambda c: replace(c, total_ticks=0), "total_ticks"),
    (lambda c: replace(c, sensor_max_radius=0.0), "sensor_max_radius"),
    (lambda c: replace(c, seed=-1), "seed"),
    (lambda c: replace(c, fixed=replace(c.fixed, people=0)), "people"),
    (lambda c: replace(c, fixed=replace(c.fixed, percentage_clustering=-0.1)),
     "percentage_clustering"),
    (lambda c: replace(c, fixed=replace(c.fixed, z_variance=0.0)), "z_variance"),
    (lambda c: replace(c, fixed=replace(c.fixed, event_sources=3)), "event_sources"),
    (lambda c: replace(c, variable=replace(c.variable, night_duration=25)),
     "night_duration"),
    (lambda c: replace(c, variable=replace(c.variable, event_duration=0)),
     "event_duration"),
    (lambda c: replace(c, variable=replace(c.variable, ndist=0.0)), "ndist"),
    (lambda c: replace(c, variable=replace(c.variable, tweet_chance=-0.2)),
     "tweet_chance"),
])
def test_invariant_violations_name_the_field(mutate, field):
    cfg = SimulationConfig(variable=VIRG, total_ticks=24, event_tick=4,
                           event_location=GridCoord(0, 4))
    with pytest.raises(ConfigError) as err:
        validate_config(mutate(cfg))
    assert err.value.field == field


def test_random_edges_link_budget():
    fixed = replace(FixedParams(), people=5,
                    twitter_network=NetworkModel.RANDOM_EDGES, num_links=11)
    cfg = SimulationConfig(fixed=fixed, variable=VIRG, total_ticks=10)
    with pytest.raises(ConfigError) as err:
        validate_config(cfg)
    assert err.value.field == "num_links"


def test_event_tick_requires_location():
    cfg = SimulationConfig(variable=VIRG, total_ticks=24, event_tick=4)
    with pytest.raises(ConfigError) as err:
        validate_config(cfg)
    assert err.value.field == "event_location"


def test_no_event_config_is_valid():
    validate_config(SimulationConfig(variable=VIRG, total_ticks=24))


def test_canonical_key_set_matches_schema():
    cfg = scenario_config("stem_school")
    doc = config_to_dict(cfg)
    assert set(doc) == set(CONFIG_KEYS)
    # one key per parameter, no aliases
    assert len(CONFIG_KEYS) == len(set(CONFIG_KEYS))


def test_dict_round_trip_scenarios():
    for name in ("virginia_beach", "stem_school", "garlic_festival"):
        cfg = scenario_config(name, seed=7)
        assert config_from_dict(config_to_dict(cfg)) == cfg


def test_unknown_and_missing_keys_rejected():
    doc = config_to_dict(scenario_config("virginia_beach"))
    doc["tweet_chanse"] = 0.1
    with pytest.raises(ConfigError) as err:
        config_from_dict(doc)
    assert err.value.field == "tweet_chanse"

    missing = {k: v for k, v in config_to_dict(scenario_config("virginia_beach")).items()
               if k != "ndist"}
    with pytest.raises(ConfigError) as err:
        config_from_dict(missing)
    assert err.value.field == "ndist"


def test_bad_network_name_rejected():
    doc = config_to_dict(scenario_config("virginia_beach"))
    doc["twitter_network"] = "small_world"
    with pytest.raises(ConfigError) as err:
        config_from_dict(doc)
    assert err.value.field == "twitter_network"


@st.composite
def valid_configs(draw):
    people = draw(st.integers(1, 40))
    total_ticks = draw(st.integers(1, 48))
    day_length = draw(st.integers(2, 24))
    has_event = draw(st.booleans())
    half = draw(st.integers(2, 20))
    n_events = draw(st.booleans())
    fixed = FixedParams(
        people=people,
        probability=draw(st.floats(0, 1)),
        percentage_clustering=draw(st.floats(0, 1)),
        num_clusters=draw(st.integers(1, 4)),
        cluster=draw(st.booleans()),
        step=draw(st.integers(1, 7)),
        user_interest=draw(st.integers(0, 6)),
        event_interest=draw(st.integers(0, 6)),
        night_mode=draw(st.booleans()),
        eight_mode=draw(st.booleans()),
        n_events=n_events,
        event_sources=draw(st.integers(1, 3)) if n_events else 1,
        world_half_extent=half,
        day_length=day_length,
        initial_spread_radius=draw(st.integers(0, 4)),
    )
    variable = VariableParams(
        tweet_chance=draw(st.floats(0, 1)),
        event_duration=draw(st.integers(1, 30)),
        event_tweet_chance=draw(st.floats(0, 1)),
        night_tweet_chance=draw(st.floats(0, 1)),
        night_duration=draw(st.integers(0, day_length)),
        ndist=draw(st.floats(0.01, 4)),
    )
    return SimulationConfig(
        fixed=fixed, variable=variable,
        seed=draw(st.integers(0, 2 ** 64 - 1)),
        total_ticks=total_ticks,
        event_tick=draw(st.integers(0, total_ticks - 1)) if has_event else None,
        event_location=GridCoord(draw(st.integers(-half, half)),
                                 draw(st.integers(-half, half))) if has_event else None,
        sensor_location=GridCoord(draw(st.integers(-half, half)),
                                  draw(st.integers(-half, half))),
        sensor_max_radius=draw(st.floats(0.5, 40)),
    )


@settings(max_examples=60, deadline=None)
@given(valid_configs())
def test_serialization_round_trip(cfg):
    validate_config(cfg)
    assert config_from_dict(config_to_dict(cfg)) == cfg


def test_night_window_occupies_end_of_day():
    mask = night_mask(48, day_length=24, night_duration=8)
    expected = np.zeros(48, dtype=bool)
    expected[16:24] = True
    expected[40:48] = True
    assert (mask == expected).all()
    assert not is_night(15, 24, 8)
    assert is_night(16, 24, 8)
    assert is_night(23, 24, 8)
    assert not is_night(24, 24, 8)


def test_night_mask_zero_duration():
    assert not night_mask(24, 24, 0).any()


def test_count_series_validation():
    with pytest.raises(ValueError):
        CountSeries(values=np.array([1, -2, 3]))
    with pytest.raises(ValueError):
        CountSeries(values=np.array([], dtype=int))
    s = CountSeries(values=[3, 1, 2], event_tick=1, label="x")
    assert len(s) == 3
    assert s.values.dtype == np.int64


def test_grid_coord_distance():
    assert GridCoord(0, 0).distance_to(GridCoord(3, 4)) == 5.0
