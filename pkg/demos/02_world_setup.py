"""Inspect the setup phase: agent placement, follower network, sensor rings.

Shows the clustering split, the Erdos-Renyi degree distribution against its
binomial expectation, and how the concentric sensor rings partition
distances.  Agent and edge tables are dumped for external inspection.
"""

from pathlib import Path

import numpy as np

import tweetsim as ts
from tweetsim import seriesio

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    cfg = ts.validate_config(ts.scenario_config("virginia_beach", seed=0))
    rng = np.random.default_rng(cfg.seed)

    agents = ts.place_users(cfg, rng)
    clustered = sum(a.clustered for a in agents)
    print(f"placed {len(agents)} agents: {clustered} clustered "
          f"({cfg.fixed.num_clusters} clusters), {len(agents) - clustered} uniform")

    network = ts.build_network(cfg, rng)
    degrees = network.degrees()
    n = cfg.fixed.people
    expected_degree = cfg.fixed.probability * (n - 1)
    print(f"network: {network.n_edges} edges "
          f"(expected {cfg.fixed.probability * n * (n - 1) / 2:.0f})")
    print(f"degrees: mean {degrees.mean():.1f} (expected {expected_degree:.1f}), "
          f"min {degrees.min()}, max {degrees.max()}")

    rings = ts.build_rings(cfg.fixed.step, cfg.sensor_max_radius)
    print(f"sensor rings at radii {list(rings.radii)} "
          f"(step {cfg.fixed.step}, max {cfg.sensor_max_radius})")
    positions = np.array([[a.position.x, a.position.y] for a in agents])
    dist = np.hypot(positions[:, 0] - cfg.sensor_location.x,
                    positions[:, 1] - cfg.sensor_location.y)
    ring_idx = rings.ring_indices(dist)
    for k, radius in enumerate(rings.radii):
        print(f"  ring {k + 1} (<= {radius:4.0f} patches): "
              f"{(ring_idx == k).sum():4d} agents")
    print(f"  beyond outer ring: {(ring_idx == -1).sum():4d} agents")

    seriesio.write_agents_table(OUT / "agents.csv", agents)
    seriesio.write_edges_table(OUT / "edges.csv", network)
    print(f"dumps written to {OUT / 'agents.csv'} and {OUT / 'edges.csv'}")


if __name__ == "__main__":
    main()
