"""Simulation phase: per-tick gate draws, event spreading, tweet decisions.

Each tick proceeds in a fixed order (this order is the determinism contract:
identical config and seed give bit-identical output):

1. one gate draw z_i per agent, in agent-id order;
2. event-influence spreading (while the event is active), frontier cells
   drawn in row-major grid order; influence clears when the event ends;
3. every agent decides at most one action from the shared z_i:

   * during the night window (last ``night_duration`` ticks of each day,
     with night mode on) the only possible action is a night tweet,
     taken iff z_i < night_tweet_chance;
   * while the event is live (active, or within ``event_interest`` ticks
     after it ends) an agent with z_i < q_i / (q_i + tweet_chance) tries the
     event branch: an original event tweet iff its patch is influenced,
     z_i < q_i and the event is still active; otherwise an event retweet iff
     a linked neighbor emitted event traffic within the last
     ``event_interest`` ticks and z_i < q_i; an agent that enters the branch
     but takes neither action falls through to routine behavior;
   * routine behavior: iff z_i < tweet_chance, a standard retweet when a
     linked neighbor emitted standard traffic within the last
     ``user_interest`` ticks, else a standard tweet.

The event-tweet probability decays with time since onset and distance from
the nearest source, q = c * max(1, t - t0)^(-ndist/alpha)
* max(1, d)^(-ndist/beta), so it equals the configured chance c in the
immediate vicinity of a fresh event and never exceeds it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .core import (CountSeries, GridCoord, SimulationConfig, is_night,
                   validate_config)
from .worldgen import (Network, RingSet, build_network, build_rings,
                       place_users, positions_array)

_NEVER = np.int64(-(10 ** 12))  # sentinel: agent has not emitted yet

_NONE, _STANDARD, _EVENT, _NIGHT, _STANDARD_RT, _EVENT_RT = -1, 0, 1, 2, 3, 4


class TweetKind(enum.Enum):
    STANDARD = "standard"
    EVENT_RELATED = "event"
    NIGHT = "night"
    STANDARD_RETWEET = "standard_retweet"
    EVENT_RETWEET = "event_retweet"


_CODE_TO_KIND = {
    _STANDARD: TweetKind.STANDARD,
    _EVENT: TweetKind.EVENT_RELATED,
    _NIGHT: TweetKind.NIGHT,
    _STANDARD_RT: TweetKind.STANDARD_RETWEET,
    _EVENT_RT: TweetKind.EVENT_RETWEET,
}


@dataclass(frozen=True)
class PatchState:
    """Event-influence state of one patch."""

    influenced: bool
    influenced_since: Optional[int]


@dataclass(frozen=True)
class TweetEvent:
    """One emission: which agent tweeted what kind, where, at which tick."""

    tick: int
    agent_id: int
    kind: TweetKind
    position: GridCoord


@dataclass(frozen=True)
class TickRecord:
    """Per-tick emission counts plus the sensor's per-ring counts."""

    tick: int
    standard: int
    event: int
    night: int
    standard_retweet: int
    event_retweet: int
    total: int
    ring_counts: tuple

    @property
    def event_related(self) -> int:
        """Original event tweets plus event retweets."""
        return self.event + self.event_retweet


@dataclass
class World:
    """Mutable simulation state; build with :func:`initialize`."""

    config: SimulationConfig
    rng: np.random.Generator
    agents: list
    network: Network
    rings: RingSet
    sources: np.ndarray              # (s, 2) event source coordinates
    positions: np.ndarray            # (n, 2) agent patch coordinates
    influence: np.ndarray            # (S, S) bool, S = 2*half_extent + 1
    influenced_since: np.ndarray     # (S, S) tick of influence onset, -1 if none
    last_standard: np.ndarray        # (n,) tick of latest standard tweet/retweet
    last_event: np.ndarray           # (n,) tick of latest event tweet/retweet
    night_owl: np.ndarray            # (n,) bool: has tweeted in a night window
    last_events: List[TweetEvent] = field(default_factory=list)

    # caches derived from static geometry
    _adjacency: object = None
    _dist_factor: np.ndarray = None  # max(1, d_source)^(-ndist/beta) per agent
    _ring_index: np.ndarray = None   # sensor ring per agent, -1 beyond rings
    _agent_cells: tuple = None       # grid indices of each agent's patch

    @property
    def n_agents(self) -> int:
        return self.config.fixed.people

    @property
    def event_end(self) -> Optional[int]:
        if self.config.event_tick is None:
            return None
        return self.config.event_tick + self.config.variable.event_duration

    def influenced_cells(self) -> set:
        """Set of influenced patch coordinates (x, y)."""
        half = self.config.fixed.world_half_extent
        ix, iy = np.nonzero(self.influence)
        return {(int(x - half), int(y - half)) for x, y in zip(ix, iy)}

    def patch_state(self, coord: GridCoord) -> PatchState:
        """Influence state of one patch (grid storage, per-patch view)."""
        half = self.config.fixed.world_half_extent
        if abs(coord.x) > half or abs(coord.y) > half:
            raise ValueError(f"({coord.x}, {coord.y}) outside world bounds "
                             f"+/-{half}")
        influenced = bool(self.influence[coord.x + half, coord.y + half])
        since = int(self.influenced_since[coord.x + half, coord.y + half])
        return PatchState(influenced=influenced,
                          influenced_since=since if influenced else None)


def draw_z(rng: np.random.Generator, tweet_threshold: float, z_variance: float,
           size: Optional[int] = None):
    """Gate draw(s): normal with mean ``tweet_threshold``, variance ``z_variance``.

    One draw per agent per tick; the same draw is reused by every gate that
    tick.  Draws are not truncated, so values above every chance (or below 0)
    simply fail (or pass) all gates.
    """
    if z_variance <= 0:
        raise ValueError(f"z_variance must be > 0, got {z_variance}")
    return rng.normal(loc=tweet_threshold, scale=math.sqrt(z_variance), size=size)


def event_tweet_probability(t: int, t_event: int, d_event, event_tweet_chance: float,
                            ndist: float, alpha: float = 1.0, beta: float = 20.0):
    """Decayed probability of tweeting about the event at tick ``t``.

    Both the elapsed-time and distance bases are clamped below at 1, so the
    result equals ``event_tweet_chance`` in the immediate vicinity of a fresh
    event and decays monotonically from there.  ``d_event`` may be an array.
    """
    if t < t_event:
        raise ValueError(f"t ({t}) must be >= t_event ({t_event})")
    time_factor = max(1.0, float(t - t_event)) ** (-ndist / alpha)
    dist = np.maximum(1.0, np.asarray(d_event, dtype=float))
    value = event_tweet_chance * time_factor * dist ** (-ndist / beta)
    return float(value) if np.isscalar(d_event) else value


def initialize(config: SimulationConfig, rng: Optional[np.random.Generator] = None) -> World:
    """Run the setup phase and return a ready-to-step world.

    Consumes the random stream in a fixed order: agent placement, network
    generation, then any extra event-source placement.
    """
    config = validate_config(config)
    if rng is None:
        rng = np.random.default_rng(config.seed)
    f = config.fixed

    agents = place_users(config, rng)
    network = build_network(config, rng)

    if config.event_tick is not None:
        sources = [[config.event_location.x, config.event_location.y]]
        extra = f.event_sources - 1 if f.n_events else 0
        if extra:
            half = f.world_half_extent
            more = rng.integers(-half, half + 1, size=(extra, 2))
            sources.extend(more.tolist())
        sources = np.asarray(sources, dtype=np.int64)
    else:
        sources = np.empty((0, 2), dtype=np.int64)

    size = 2 * f.world_half_extent + 1
    positions = positions_array(agents)
    rings = build_rings(f.step, config.sensor_max_radius)

    world = World(
        config=config,
        rng=rng,
        agents=agents,
        network=network,
        rings=rings,
        sources=sources,
        positions=positions,
        influence=np.zeros((size, size), dtype=bool),
        influenced_since=np.full((size, size), -1, dtype=np.int64),
        last_standard=np.full(f.people, _NEVER, dtype=np.int64),
        last_event=np.full(f.people, _NEVER, dtype=np.int64),
        night_owl=np.zeros(f.people, dtype=bool),
    )

    world._adjacency = network.to_adjacency()
    half = f.world_half_extent
    world._agent_cells = (positions[:, 0] + half, positions[:, 1] + half)
    sensor = np.array([config.sensor_location.x, config.sensor_location.y])
    dist_sensor = np.hypot(*(positions - sensor).T)
    world._ring_index = rings.ring_indices(dist_sensor)
    if sources.size:
        diffs = positions[:, None, :] - sources[None, :, :]
        d_source = np.hypot(diffs[..., 0], diffs[..., 1]).min(axis=1)
        world._dist_factor = (np.maximum(1.0, d_source)
                              ** (-config.variable.ndist / f.beta))
    else:
        world._dist_factor = np.ones(f.people)
    return world


def _shifted(mask: np.ndarray, dx: int, dy: int) -> np.ndarray:
    """Mask translated by (dx, dy) on the bounded grid (no wraparound)."""
    out = np.zeros_like(mask)
    sx = slice(max(dx, 0), mask.shape[0] + min(dx, 0))
    sy = slice(max(dy, 0), mask.shape[1] + min(dy, 0))
    tx = slice(max(-dx, 0), mask.shape[0] + min(-dx, 0))
    ty = slice(max(-dy, 0), mask.shape[1] + min(-dy, 0))
    out[sx, sy] = mask[tx, ty]
    return out


_SHIFTS_4 = ((1, 0), (-1, 0), (0, 1), (0, -1))
_SHIFTS_8 = _SHIFTS_4 + ((1, 1), (1, -1), (-1, 1), (-1, -1))


def spread_event(world: World, t: int) -> World:
    """Advance event influence for active tick ``t`` (mutates the world).

    At the onset tick every patch within ``initial_spread_radius`` of each
    source is influenced at once; at each later active tick every
    uninfluenced patch adjacent to an influenced one (8-neighborhood when
    eight_mode, else 4) is influenced with probability
    min(1, spread_rate / (t - onset)), so spreading slows as time passes.
    """
    config = world.config
    te = config.event_tick
    end = world.event_end
    if te is None or not (te <= t < end):
        raise ValueError(f"spread_event called outside the active window at tick {t}")
    f = config.fixed
    half = f.world_half_extent

    if t == te:
        coords = np.arange(-half, half + 1)
        gx, gy = np.meshgrid(coords, coords, indexing="ij")
        newly = np.zeros_like(world.influence)
        for sx, sy in world.sources:
            newly |= (gx - sx) ** 2 + (gy - sy) ** 2 <= f.initial_spread_radius ** 2
        newly &= ~world.influence
    else:
        shifts = _SHIFTS_8 if f.eight_mode else _SHIFTS_4
        frontier = np.zeros_like(world.influence)
        for dx, dy in shifts:
            frontier |= _shifted(world.influence, dx, dy)
        frontier &= ~world.influence
        p = min(1.0, f.spread_rate / (t - te))
        if p >= 1.0:
            newly = frontier
        else:
            newly = np.zeros_like(frontier)
            cells = np.flatnonzero(frontier.ravel())  # row-major draw order
            hits = cells[world.rng.random(cells.size) < p]
            newly.ravel()[hits] = True

    world.influence |= newly
    world.influenced_since[newly] = t
    return world


def _clear_influence(world: World) -> None:
    world.influence[:] = False
    world.influenced_since[:] = -1


def _event_window(config: SimulationConfig, t: int) -> bool:
    """Event branch is reachable while active or within event_interest after."""
    te = config.event_tick
    if te is None:
        return False
    end = te + config.variable.event_duration
    return te <= t < end + config.fixed.event_interest


def decide_action(world: World, agent_id: int, z_i: float, t: int) -> Optional[TweetKind]:
    """Single-agent decision rule (reference path; ``step`` uses the batch form).

    Reads start-of-tick neighbor memory and current influence; never mutates.
    """
    config = world.config
    f, v = config.fixed, config.variable

    if f.night_mode and is_night(t, f.day_length, v.night_duration):
        return TweetKind.NIGHT if z_i < v.night_tweet_chance else None

    adjacency = world._adjacency
    neighbors = adjacency.indices[adjacency.indptr[agent_id]:adjacency.indptr[agent_id + 1]]

    if _event_window(config, t):
        q = event_tweet_probability(
            t, config.event_tick, _agent_source_distance(world, agent_id),
            v.event_tweet_chance, v.ndist, f.alpha, f.beta)
        gate = q / (q + v.tweet_chance) if q + v.tweet_chance > 0 else 0.0
        if z_i < gate:
            cx, cy = world._agent_cells[0][agent_id], world._agent_cells[1][agent_id]
            if world.influence[cx, cy] and z_i < q and t < world.event_end:
                return TweetKind.EVENT_RELATED
            if z_i < q and neighbors.size and (
                    world.last_event[neighbors] >= t - f.event_interest).any():
                return TweetKind.EVENT_RETWEET
            # neither event action fired: fall through to routine behavior

    if z_i < v.tweet_chance:
        if neighbors.size and (world.last_standard[neighbors] >= t - f.user_interest).any():
            return TweetKind.STANDARD_RETWEET
        return TweetKind.STANDARD
    return None


def _agent_source_distance(world: World, agent_id: int) -> float:
    pos = world.positions[agent_id]
    d = np.hypot(*(pos - world.sources).T)
    return float(d.min()) if d.size else 1.0


def _decide_all(world: World, z: np.ndarray, t: int) -> np.ndarray:
    """Vectorized decision for every agent; returns int action codes."""
    config = world.config
    f, v = config.fixed, config.variable
    n = world.n_agents
    codes = np.full(n, _NONE, dtype=np.int8)

    if f.night_mode and is_night(t, f.day_length, v.night_duration):
        codes[z < v.night_tweet_chance] = _NIGHT
        return codes

    adjacency = world._adjacency
    undecided = np.ones(n, dtype=bool)

    if _event_window(config, t):
        time_factor = max(1.0, float(t - config.event_tick)) ** (-v.ndist / f.alpha)
        q = v.event_tweet_chance * time_factor * world._dist_factor
        denom = q + v.tweet_chance
        gate = np.divide(q, denom, out=np.zeros_like(q), where=denom > 0)
        in_branch = z < gate
        z_below_q = z < q
        influenced = world.influence[world._agent_cells]
        original = in_branch & z_below_q & influenced & (t < world.event_end)
        recent_evt = (world.last_event >= t - f.event_interest).astype(np.int64)
        has_evt_neighbor = np.asarray(adjacency @ recent_evt).ravel() > 0
        retweet = in_branch & z_below_q & ~original & has_evt_neighbor
        codes[original] = _EVENT
        codes[retweet] = _EVENT_RT
        undecided &= codes == _NONE

    routine = undecided & (z < v.tweet_chance)
    recent_std = (world.last_standard >= t - f.user_interest).astype(np.int64)
    has_std_neighbor = np.asarray(adjacency @ recent_std).ravel() > 0
    codes[routine & has_std_neighbor] = _STANDARD_RT
    codes[routine & ~has_std_neighbor] = _STANDARD
    return codes


def _advance_influence(world: World, t: int) -> None:
    """Spread while the event is active; drop all influence when it ends."""
    te, end = world.config.event_tick, world.event_end
    if te is not None:
        if te <= t < end:
            spread_event(world, t)
        elif t == end:
            _clear_influence(world)


def _apply_actions(world: World, codes: np.ndarray, t: int) -> None:
    """Commit this tick's actions to the retweet memories and owl flags."""
    standard_like = (codes == _STANDARD) | (codes == _STANDARD_RT)
    event_like = (codes == _EVENT) | (codes == _EVENT_RT)
    world.last_standard[standard_like] = t
    world.last_event[event_like] = t
    world.night_owl |= codes == _NIGHT


def step(world: World, t: int) -> TickRecord:
    """Advance one tick: draw gates, spread influence, decide, count.

    Sensor ring counts tally every emission by Euclidean distance from the
    sensor; emissions beyond the outermost ring are in no ring (they still
    count toward the totals).
    """
    config = world.config
    f = config.fixed

    z = draw_z(world.rng, f.tweet_threshold, f.z_variance, size=world.n_agents)
    _advance_influence(world, t)
    codes = _decide_all(world, z, t)

    acted = codes != _NONE
    _apply_actions(world, codes, t)

    ring_counts = np.zeros(world.rings.n_rings, dtype=np.int64)
    in_ring = acted & (world._ring_index >= 0)
    if in_ring.any():
        ring_counts = np.bincount(world._ring_index[in_ring],
                                  minlength=world.rings.n_rings)

    world.last_events = [
        TweetEvent(t, int(i), _CODE_TO_KIND[int(codes[i])],
                   GridCoord(int(world.positions[i, 0]), int(world.positions[i, 1])))
        for i in np.flatnonzero(acted)
    ]

    counts = {code: int((codes == code).sum())
              for code in (_STANDARD, _EVENT, _NIGHT, _STANDARD_RT, _EVENT_RT)}
    return TickRecord(
        tick=t,
        standard=counts[_STANDARD],
        event=counts[_EVENT],
        night=counts[_NIGHT],
        standard_retweet=counts[_STANDARD_RT],
        event_retweet=counts[_EVENT_RT],
        total=int(acted.sum()),
        ring_counts=tuple(int(c) for c in ring_counts),
    )


def run(config: SimulationConfig) -> List[TickRecord]:
    """Validate, set up and simulate the full horizon; deterministic per seed."""
    config = validate_config(config)
    world = initialize(config)
    return [step(world, t) for t in range(config.total_ticks)]


def records_to_series(records: List[TickRecord], kind: str = "total",
                      event_tick: Optional[int] = None, label: str = "") -> CountSeries:
    """Extract one per-tick count column from a run as a CountSeries."""
    values = np.array([getattr(r, kind) for r in records], dtype=np.int64)
    return CountSeries(values=values, event_tick=event_tick, label=label)
