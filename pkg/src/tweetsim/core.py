"""Domain types and configuration schema shared by all modules.

A simulation is described by three layers of parameters:

* ``FixedParams`` -- world construction knobs that normally stay constant
  across runs (population, network model, clustering, gate threshold, ...).
* ``VariableParams`` -- the per-scenario behavioral probabilities and
  durations (tweet chances, event duration, night window, decay scale).
* ``SimulationConfig`` -- the run itself: the two parameter blocks plus
  seed, horizon, event placement and sensor placement.

All types are immutable after construction; ``validate_config`` checks every
invariant and returns the config unchanged, so a validated config can be
shared read-only across concurrent runs.

The on-disk format is a flat JSON object whose keys are the canonical
parameter names (see ``CONFIG_KEYS`` and the README key table).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, fields
from typing import Optional, Sequence

import numpy as np


class ConfigError(ValueError):
    """A configuration invariant failed; ``field`` names the offending key."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


class NetworkModel(str, enum.Enum):
    """Which generator builds the follower network."""

    ERDOS_RENYI = "erdos_renyi"
    RANDOM_EDGES = "random_edges"


@dataclass(frozen=True)
class GridCoord:
    """Integer patch coordinate; the world is the square |x|,|y| <= half extent."""

    x: int
    y: int

    def distance_to(self, other: "GridCoord") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class FixedParams:
    """World-construction parameters held fixed across scenario runs.

    ``alpha``/``beta`` scale the time and distance decay exponents of the
    event-tweet probability; ``z_variance`` is the variance (not standard
    deviation) of the per-agent per-tick gate draw.  ``world_half_extent``,
    ``initial_spread_radius``, ``spread_rate`` and ``day_length`` fill in
    geometry and timing left open by the behavioral parameters.
    """

    n_events: bool = False
    event_sources: int = 1
    eight_mode: bool = True
    twitter_network: NetworkModel = NetworkModel.ERDOS_RENYI
    num_links: int = 0
    people: int = 1000
    probability: float = 0.45
    step: int = 7
    num_clusters: int = 9
    cluster: bool = True
    percentage_clustering: float = 0.75
    tweet_threshold: float = 0.7
    user_interest: int = 5
    event_interest: int = 5
    night_mode: bool = True
    alpha: float = 1.0
    beta: float = 20.0
    z_variance: float = 0.2
    world_half_extent: int = 50
    initial_spread_radius: int = 3
    spread_rate: float = 1.0
    day_length: int = 24


@dataclass(frozen=True)
class VariableParams:
    """Scenario-specific behavioral parameters (no defaults: always explicit)."""

    tweet_chance: float
    event_duration: int
    event_tweet_chance: float
    night_tweet_chance: float
    night_duration: int
    ndist: float


@dataclass(frozen=True)
class SimulationConfig:
    """One reproducible run: parameters, seed, horizon and placements.

    ``event_tick`` may be None for runs with no event at all (routine-only
    traffic).  When it is set, ``event_location`` must be set too.
    """

    variable: VariableParams
    total_ticks: int
    fixed: FixedParams = field(default_factory=FixedParams)
    seed: int = 0
    event_tick: Optional[int] = None
    event_location: Optional[GridCoord] = None
    sensor_location: GridCoord = field(default_factory=lambda: GridCoord(0, 0))
    sensor_max_radius: float = 28.0


@dataclass
class CountSeries:
    """A dense, tick-indexed series of nonnegative integer counts."""

    values: np.ndarray
    event_tick: Optional[int] = None
    label: str = ""

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.int64)
        if self.values.ndim != 1 or self.values.size < 1:
            raise ValueError("CountSeries needs a one-dimensional series of length >= 1")
        if (self.values < 0).any():
            raise ValueError("CountSeries values must be nonnegative")

    def __len__(self) -> int:
        return int(self.values.size)


def is_night(tick: int, day_length: int, night_duration: int) -> bool:
    """True when ``tick`` falls in the low-activity window.

    The window occupies the last ``night_duration`` ticks of every
    ``day_length``-tick day.
    """
    return tick % day_length >= day_length - night_duration


def night_mask(n_ticks: int, day_length: int, night_duration: int) -> np.ndarray:
    """Boolean mask over ``n_ticks`` ticks marking the low-activity window."""
    ticks = np.arange(n_ticks)
    return (ticks % day_length) >= (day_length - night_duration)


def _check(cond: bool, field_name: str, message: str) -> None:
    if not cond:
        raise ConfigError(field_name, message)


def _check_prob(value: float, field_name: str) -> None:
    _check(0.0 <= value <= 1.0, field_name, f"must be in [0, 1], got {value}")


def validate_config(config: SimulationConfig) -> SimulationConfig:
    """Check every invariant and return the config unchanged.

    Raises ConfigError naming the offending field on the first violation.
    """
    f, v = config.fixed, config.variable

    _check(f.people >= 1, "people", f"must be >= 1, got {f.people}")
    _check_prob(f.probability, "probability")
    _check_prob(f.percentage_clustering, "percentage_clustering")
    _check(f.step >= 1, "step", f"must be >= 1, got {f.step}")
    _check(f.num_clusters >= 1, "num_clusters", f"must be >= 1, got {f.num_clusters}")
    _check(f.num_links >= 0, "num_links", f"must be >= 0, got {f.num_links}")
    _check(f.user_interest >= 0, "user_interest", f"must be >= 0, got {f.user_interest}")
    _check(f.event_interest >= 0, "event_interest", f"must be >= 0, got {f.event_interest}")
    _check(f.event_sources >= 1, "event_sources", f"must be >= 1, got {f.event_sources}")
    _check(f.alpha > 0, "alpha", f"must be > 0, got {f.alpha}")
    _check(f.beta > 0, "beta", f"must be > 0, got {f.beta}")
    _check(f.z_variance > 0, "z_variance", f"must be > 0, got {f.z_variance}")
    _check(f.world_half_extent >= 1, "world_half_extent",
           f"must be >= 1, got {f.world_half_extent}")
    _check(f.initial_spread_radius >= 0, "initial_spread_radius",
           f"must be >= 0, got {f.initial_spread_radius}")
    _check(f.spread_rate > 0, "spread_rate", f"must be > 0, got {f.spread_rate}")
    _check(f.day_length >= 1, "day_length", f"must be >= 1, got {f.day_length}")

    if not f.n_events:
        _check(f.event_sources == 1, "event_sources",
               "must be 1 when n_events is false")
    if f.twitter_network is NetworkModel.RANDOM_EDGES:
        max_links = f.people * (f.people - 1) // 2
        _check(f.num_links <= max_links, "num_links",
               f"must be <= {max_links} for {f.people} people, got {f.num_links}")

    _check_prob(v.tweet_chance, "tweet_chance")
    _check_prob(v.event_tweet_chance, "event_tweet_chance")
    _check_prob(v.night_tweet_chance, "night_tweet_chance")
    _check(v.event_duration >= 1, "event_duration",
           f"must be >= 1, got {v.event_duration}")
    _check(v.night_duration >= 0, "night_duration",
           f"must be >= 0, got {v.night_duration}")
    _check(v.night_duration <= f.day_length, "night_duration",
           f"must be <= day_length ({f.day_length}), got {v.night_duration}")
    _check(v.ndist > 0, "ndist", f"must be > 0, got {v.ndist}")

    _check(config.total_ticks >= 1, "total_ticks",
           f"must be >= 1, got {config.total_ticks}")
    _check(0 <= config.seed < 2 ** 64, "seed",
           f"must be an unsigned 64-bit integer, got {config.seed}")

    half = f.world_half_extent
    if config.event_tick is not None:
        _check(0 <= config.event_tick < config.total_ticks, "event_tick",
               f"must satisfy 0 <= event_tick < total_ticks "
               f"({config.total_ticks}), got {config.event_tick}")
        _check(config.event_location is not None, "event_location",
               "required when event_tick is set")
        loc = config.event_location
        _check(abs(loc.x) <= half and abs(loc.y) <= half, "event_location",
               f"({loc.x}, {loc.y}) outside world bounds +/-{half}")
    s = config.sensor_location
    _check(abs(s.x) <= half and abs(s.y) <= half, "sensor_location",
           f"({s.x}, {s.y}) outside world bounds +/-{half}")
    _check(config.sensor_max_radius > 0, "sensor_max_radius",
           f"must be > 0, got {config.sensor_max_radius}")

    return config


# Canonical flat config keys, in serialization order.
_FIXED_KEYS = tuple(fld.name for fld in fields(FixedParams))
_VARIABLE_KEYS = tuple(fld.name for fld in fields(VariableParams))
_RUN_KEYS = ("seed", "total_ticks", "event_tick", "event_location",
             "sensor_location", "sensor_max_radius")
CONFIG_KEYS = _FIXED_KEYS + _VARIABLE_KEYS + _RUN_KEYS


def config_to_dict(config: SimulationConfig) -> dict:
    """Flatten a config to the canonical key/value document."""
    out = {}
    for key in _FIXED_KEYS:
        value = getattr(config.fixed, key)
        out[key] = value.value if isinstance(value, NetworkModel) else value
    for key in _VARIABLE_KEYS:
        out[key] = getattr(config.variable, key)
    out["seed"] = config.seed
    out["total_ticks"] = config.total_ticks
    out["event_tick"] = config.event_tick
    out["event_location"] = (None if config.event_location is None
                             else [config.event_location.x, config.event_location.y])
    out["sensor_location"] = [config.sensor_location.x, config.sensor_location.y]
    out["sensor_max_radius"] = config.sensor_max_radius
    return out


def _coord_from_value(value, key: str) -> GridCoord:
    if (not isinstance(value, Sequence) or isinstance(value, str)
            or len(value) != 2):
        raise ConfigError(key, f"expected a [x, y] pair, got {value!r}")
    return GridCoord(int(value[0]), int(value[1]))


def config_from_dict(doc: dict) -> SimulationConfig:
    """Build a SimulationConfig from the flat key/value document.

    Unknown keys are rejected so typos fail loudly; the variable-parameter
    keys and ``total_ticks`` are required, everything else has defaults.
    """
    unknown = set(doc) - set(CONFIG_KEYS)
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown configuration key")
    missing = [k for k in _VARIABLE_KEYS + ("total_ticks",) if k not in doc]
    if missing:
        raise ConfigError(missing[0], "required configuration key is missing")

    fixed_kwargs = {}
    for key in _FIXED_KEYS:
        if key not in doc:
            continue
        value = doc[key]
        if key == "twitter_network":
            try:
                value = NetworkModel(value)
            except ValueError:
                choices = ", ".join(m.value for m in NetworkModel)
                raise ConfigError(key, f"must be one of: {choices}") from None
        fixed_kwargs[key] = value
    variable_kwargs = {key: doc[key] for key in _VARIABLE_KEYS}

    event_location = doc.get("event_location")
    sensor_location = doc.get("sensor_location", [0, 0])
    return SimulationConfig(
        fixed=FixedParams(**fixed_kwargs),
        variable=VariableParams(**variable_kwargs),
        seed=int(doc.get("seed", 0)),
        total_ticks=int(doc["total_ticks"]),
        event_tick=None if doc.get("event_tick") is None else int(doc["event_tick"]),
        event_location=(None if event_location is None
                        else _coord_from_value(event_location, "event_location")),
        sensor_location=_coord_from_value(sensor_location, "sensor_location"),
        sensor_max_radius=float(doc.get("sensor_max_radius", 28.0)),
    )
