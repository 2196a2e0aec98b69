"""World setup: agent placement, follower-network generation, sensor rings.

Everything here is a pure function of (config, rng): repeated calls with a
generator seeded the same way return identical results, and seed sweeps may
run in parallel as long as each call owns its generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import sparse

from .core import ConfigError, GridCoord, NetworkModel, SimulationConfig

#: Radius (in patches) of the disk cluster members scatter over.
DEFAULT_CLUSTER_SPREAD = 3.0


@dataclass(frozen=True)
class Agent:
    """One microblogging user, static at an integer patch position."""

    id: int
    position: GridCoord
    clustered: bool
    night_owl: bool = False


@dataclass(frozen=True)
class Network:
    """Undirected follower network over agent ids 0..n_agents-1.

    ``edges`` is an (m, 2) int array with i < j per row, sorted
    lexicographically; links are bidirectional.
    """

    edges: np.ndarray
    n_agents: int

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        object.__setattr__(self, "edges", edges)
        if edges.size == 0:
            return
        if (edges[:, 0] >= edges[:, 1]).any():
            raise ValueError("network edges must satisfy i < j (no self-loops)")
        if edges.min() < 0 or edges.max() >= self.n_agents:
            raise ValueError("network edge references an agent id out of range")
        flat = edges[:, 0] * self.n_agents + edges[:, 1]
        if np.unique(flat).size != flat.size:
            raise ValueError("network contains duplicate edges")

    @property
    def n_edges(self) -> int:
        return int(self.edges.shape[0])

    def edge_set(self) -> set:
        return {(int(i), int(j)) for i, j in self.edges}

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_agents, dtype=np.int64)
        if self.n_edges:
            np.add.at(deg, self.edges[:, 0], 1)
            np.add.at(deg, self.edges[:, 1], 1)
        return deg

    def to_adjacency(self) -> sparse.csr_matrix:
        """Symmetric adjacency in CSR form (for fast neighbor queries).

        Entries are int64 ones so that adjacency @ indicator counts neighbors
        without overflow at any degree.
        """
        if self.n_edges == 0:
            return sparse.csr_matrix((self.n_agents, self.n_agents), dtype=np.int64)
        i, j = self.edges[:, 0], self.edges[:, 1]
        rows = np.concatenate([i, j])
        cols = np.concatenate([j, i])
        data = np.ones(rows.size, dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)),
                                 shape=(self.n_agents, self.n_agents))


@dataclass(frozen=True)
class RingSet:
    """Concentric sensor rings: radii[k] = (k+1) * step, up to a max radius."""

    radii: tuple = field(default_factory=tuple)

    @property
    def n_rings(self) -> int:
        return len(self.radii)

    def ring_index(self, distance: float) -> Optional[int]:
        """Index of the innermost ring covering ``distance`` (None if beyond)."""
        for k, r in enumerate(self.radii):
            if distance <= r:
                return k
        return None

    def ring_indices(self, distances: np.ndarray) -> np.ndarray:
        """Vectorized ring_index; -1 marks distances beyond the outer ring."""
        distances = np.asarray(distances, dtype=float)
        if not self.radii:
            return np.full(distances.shape, -1, dtype=np.int64)
        idx = np.searchsorted(np.asarray(self.radii), distances, side="left")
        return np.where(idx < len(self.radii), idx, -1).astype(np.int64)


def build_rings(step: int, max_radius: float) -> RingSet:
    """Rings of width ``step`` out to ``max_radius`` (step=7, max=21 -> 7,14,21)."""
    if step < 1:
        raise ConfigError("step", f"must be >= 1, got {step}")
    count = int(max_radius // step)
    return RingSet(tuple(float(step * (k + 1)) for k in range(count)))


def place_users(config: SimulationConfig, rng: np.random.Generator,
                cluster_spread: float = DEFAULT_CLUSTER_SPREAD) -> list:
    """Place every agent on an integer patch inside the world bounds.

    With clustering enabled, floor(percentage_clustering * people) agents are
    dealt round-robin onto num_clusters centers (centers uniform over the
    world) and scattered uniformly over a disk of radius ``cluster_spread``
    around their center, then rounded to patch coordinates and clipped to the
    world.  Remaining agents (or all of them, when clustering is off) are
    uniform over the world.
    """
    f = config.fixed
    half = f.world_half_extent
    n = f.people
    n_clustered = int(f.percentage_clustering * n) if f.cluster else 0

    agents = []
    if n_clustered:
        centers = rng.integers(-half, half + 1, size=(f.num_clusters, 2))
        # Uniform over the disk: radius sqrt(U) * spread, angle uniform.
        radius = cluster_spread * np.sqrt(rng.random(n_clustered))
        angle = rng.random(n_clustered) * (2.0 * np.pi)
        offsets = np.stack([radius * np.cos(angle), radius * np.sin(angle)], axis=1)
        assigned = centers[np.arange(n_clustered) % f.num_clusters]
        pos = np.clip(np.rint(assigned + offsets).astype(np.int64), -half, half)
        for i in range(n_clustered):
            agents.append(Agent(i, GridCoord(int(pos[i, 0]), int(pos[i, 1])), True))
    if n - n_clustered:
        pos = rng.integers(-half, half + 1, size=(n - n_clustered, 2))
        for k in range(n - n_clustered):
            i = n_clustered + k
            agents.append(Agent(i, GridCoord(int(pos[k, 0]), int(pos[k, 1])), False))
    return agents


def _decode_pair_indices(flat: np.ndarray, n: int) -> np.ndarray:
    """Map linear indices over the C(n,2) pairs (i<j, lexicographic) to rows."""
    flat = np.asarray(flat, dtype=np.int64)
    # offset(i) = i*(2n-i-1)/2 is the first index of row i; invert by the
    # quadratic formula, then fix boundary rounding.
    b = 2 * n - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * flat)) / 2.0).astype(np.int64)
    offset = i * (2 * n - i - 1) // 2
    too_far = offset > flat
    i[too_far] -= 1
    offset = i * (2 * n - i - 1) // 2
    j = flat - offset + i + 1
    return np.stack([i, j], axis=1)


def build_network(config: SimulationConfig, rng: np.random.Generator) -> Network:
    """Generate the follower network named by ``twitter_network``.

    Erdos-Renyi: every unordered pair is linked independently with
    probability ``probability``.  Random-edges: exactly ``num_links`` pairs
    sampled uniformly without replacement.
    """
    f = config.fixed
    n = f.people
    n_pairs = n * (n - 1) // 2

    if f.twitter_network is NetworkModel.ERDOS_RENYI:
        if f.probability <= 0.0 or n_pairs == 0:
            return Network(np.empty((0, 2), dtype=np.int64), n)
        if f.probability >= 1.0:
            flat = np.arange(n_pairs, dtype=np.int64)
        else:
            flat = np.flatnonzero(rng.random(n_pairs) < f.probability)
    else:
        if f.num_links > n_pairs:
            raise ConfigError("num_links",
                              f"must be <= {n_pairs} for {n} people, got {f.num_links}")
        flat = np.sort(rng.choice(n_pairs, size=f.num_links, replace=False))
    return Network(_decode_pair_indices(flat, n), n)


def positions_array(agents: list) -> np.ndarray:
    """(n, 2) int array of agent positions, indexed by agent id."""
    out = np.empty((len(agents), 2), dtype=np.int64)
    for a in agents:
        out[a.id, 0] = a.position.x
        out[a.id, 1] = a.position.y
    return out
