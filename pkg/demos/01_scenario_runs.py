"""Generate synthetic tweet-count series for the three bundled scenarios.

Runs each preset, prints a per-day summary of the generated series, and
writes plot-ready tick tables (plus PNG overview plots when matplotlib is
available) under demos/output/.
"""

from pathlib import Path

import numpy as np

import tweetsim as ts
from tweetsim import seriesio

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def sparkline(values, width=48):
    """Coarse console rendering of a series."""
    blocks = " .:-=+*#%@"
    chunks = np.array_split(np.asarray(values, dtype=float), width)
    level = np.array([c.mean() for c in chunks])
    scaled = (level - level.min()) / max(np.ptp(level), 1e-9)
    return "".join(blocks[int(v * (len(blocks) - 1))] for v in scaled)


def main():
    collected = {}
    for name in ts.SCENARIO_NAMES:
        cfg = ts.scenario_config(name, seed=7)
        records = ts.run(cfg)
        totals = np.array([r.total for r in records])
        collected[name] = (cfg, records, totals)

        out_path = OUT / f"{name}.csv"
        seriesio.write_tick_table(out_path, records, event_tick=cfg.event_tick)

        duration = cfg.variable.event_duration
        pre = totals[:cfg.event_tick].mean()
        during = totals[cfg.event_tick:cfg.event_tick + duration].mean()
        print(f"\n{name}  (event at tick {cfg.event_tick}, "
              f"duration {duration} ticks)")
        print(f"  mean total before event: {pre:7.1f}")
        print(f"  mean total during event: {during:7.1f}  "
              f"({during / pre:.2f}x)")
        print(f"  series: |{sparkline(totals)}|")
        print(f"  table written to {out_path}")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not installed; skipping plots")
        return

    fig, axes = plt.subplots(3, 1, figsize=(9, 8), sharex=True)
    for ax, (name, (cfg, _, totals)) in zip(axes, collected.items()):
        ax.plot(totals, lw=1.2)
        ax.axvline(cfg.event_tick, color="red", ls="--", lw=1,
                   label="event onset")
        ax.axvline(cfg.event_tick + cfg.variable.event_duration, color="gray",
                   ls=":", lw=1, label="event end")
        ax.set_ylabel("tweets/tick")
        ax.set_title(name)
        ax.legend(loc="upper right", fontsize=8)
    axes[-1].set_xlabel("tick (hours)")
    fig.tight_layout()
    fig.savefig(OUT / "scenario_runs.png", dpi=120)
    print(f"\nplots written to {OUT / 'scenario_runs.png'}")


if __name__ == "__main__":
    main()
