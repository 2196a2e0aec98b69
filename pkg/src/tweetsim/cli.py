"""Command-line surface: simulate, estimate, validate, sweep.

Exit codes: 0 success, 2 configuration/usage errors, 3 I/O and file-format
errors, 4 numeric errors (constant series, all-zero segments).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .core import ConfigError, CountSeries, SimulationConfig, night_mask
from .engine import records_to_series, run
from .estimate import (EstimationError, estimate_event_duration,
                       estimate_probabilities, segment_series)
from .seriesio import (load_config, read_series, write_ccf_report,
                       write_manifest, write_tick_table)
from .stats import ZeroVarianceError, ccf, compare

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat()


def _manifest_path(out_path: Path) -> Path:
    return out_path.with_suffix(".manifest.json")


def _simulate_to_file(config: SimulationConfig, out_path: Path) -> None:
    started = _utcnow()
    records = run(config)
    manifest = _manifest_path(out_path)
    write_tick_table(out_path, records, event_tick=config.event_tick,
                     manifest_name=manifest.name)
    write_manifest(manifest, config, outputs=[out_path.name],
                   started_utc=started, finished_utc=_utcnow())


def cmd_simulate(config_path: str, seed: Optional[int], out_path: str) -> int:
    config = load_config(config_path)
    if seed is not None:
        config = replace(config, seed=seed)
    _simulate_to_file(config, Path(out_path))
    return EXIT_OK


def cmd_estimate(series_path: str, event_tick: Optional[int], night_spec: str,
                 smoothing_window: int) -> int:
    series, file_mask = read_series(series_path)
    if event_tick is None:
        event_tick = series.event_tick
    if event_tick is None:
        raise ConfigError("event_tick",
                          "not in the series metadata; pass --event-tick")

    if night_spec == "file":
        if file_mask is None:
            raise ConfigError("night_mask",
                              f"{series_path} has no night column")
        mask = file_mask
    elif night_spec == "auto":
        mask = None
    else:  # default: the file's column when present, else auto-detection
        mask = file_mask

    stats = segment_series(series, event_tick, night_mask=mask)
    tweet_chance, event_tweet_chance, night_tweet_chance = \
        estimate_probabilities(stats)
    duration = estimate_event_duration(series, event_tick, stats,
                                       smoothing_window=smoothing_window)
    print(json.dumps({
        "tweet_chance": round(tweet_chance, 6),
        "event_duration": duration,
        "event_tweet_chance": round(event_tweet_chance, 6),
        "night_tweet_chance": round(night_tweet_chance, 6),
    }, indent=2))
    return EXIT_OK


def cmd_validate(series_a_path: str, series_b_path: str, max_lag: int,
                 out_path: Optional[str]) -> int:
    series_a, _ = read_series(series_a_path)
    series_b, _ = read_series(series_b_path)
    report = ccf(series_a, series_b, max_lag)
    summary = compare(series_a, series_b, max_lag)
    if out_path is not None:
        write_ccf_report(out_path, report)
    else:
        print("lag,rho")
        for lag, rho in zip(report.lags, report.rho):
            print(f"{lag},{rho:.6f}")
    print(f"n={summary.n} threshold={summary.threshold:.6f} "
          f"rho0={summary.rho0:.6f} lag0_significant={summary.lag0_significant} "
          f"significant_fraction={summary.significant_fraction:.4f} "
          f"peak_lag={summary.peak_lag}")
    return EXIT_OK


def _parse_seed_range(text: str) -> range:
    parts = text.split("..")
    if len(parts) != 2:
        raise ConfigError("seeds", f"expected 'A..B', got {text!r}")
    try:
        first, last = int(parts[0]), int(parts[1])
    except ValueError:
        raise ConfigError("seeds", f"expected integers in 'A..B', got {text!r}") from None
    if last < first:
        raise ConfigError("seeds", f"empty range {text!r}")
    return range(first, last + 1)


def _sweep_one(args) -> None:
    config_path, seed, out_path = args
    config = replace(load_config(config_path), seed=seed)
    _simulate_to_file(config, Path(out_path))


def cmd_sweep(config_path: str, seeds: str, out_dir: str, jobs: int = 1) -> int:
    seed_range = _parse_seed_range(seeds)
    load_config(config_path)  # fail early on a bad config
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    tasks = [(config_path, seed, out / f"run_seed{seed}.csv") for seed in seed_range]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(_sweep_one, tasks))
    else:
        for task in tasks:
            _sweep_one(task)

    totals = []
    for _, seed, path in tasks:
        series, _ = read_series(path)
        totals.append(series.values)
    stacked = np.stack(totals)
    lines = [f"# tweetsim={__version__}",
             f"# seeds={seed_range.start}..{seed_range.stop - 1}",
             "tick,mean_total,std_total"]
    for t in range(stacked.shape[1]):
        lines.append(f"{t},{stacked[:, t].mean():.6f},{stacked[:, t].std():.6f}")
    (out / "summary.csv").write_text("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetsim",
        description="Simulate event-driven microblogging count series, "
                    "estimate parameters from real series, and validate "
                    "synthetic output by cross-correlation.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one simulation and write a tick table")
    p.add_argument("--config", required=True, help="config JSON (or run manifest)")
    p.add_argument("--seed", type=int, default=None,
                   help="override the config seed")
    p.add_argument("--out", required=True, help="output tick-table path")

    p = sub.add_parser("estimate",
                       help="estimate gate probabilities and event duration "
                            "from a count series")
    p.add_argument("series", help="series file (tick,count[,night])")
    p.add_argument("--event-tick", type=int, default=None,
                   help="event onset tick (default: series metadata)")
    p.add_argument("--night-mask", choices=("file", "auto", "default"),
                   default="default",
                   help="night ticks from the file's night column or from "
                        "trough auto-detection (default: the column when "
                        "present, else auto)")
    p.add_argument("--smoothing-window", type=int, default=3,
                   help="centered moving-average width for event duration")

    p = sub.add_parser("validate",
                       help="cross-correlate two equal-length series")
    p.add_argument("series_a")
    p.add_argument("series_b")
    p.add_argument("--max-lag", type=int, default=20)
    p.add_argument("--out", default=None, help="write the (lag,rho) table here "
                                               "instead of stdout")

    p = sub.add_parser("sweep", help="run one config across a seed range")
    p.add_argument("--config", required=True)
    p.add_argument("--seeds", required=True, help="inclusive range, e.g. 1..10")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--jobs", type=int, default=1,
                   help="concurrent runs (each seed owns its stream and file)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(args.config, args.seed, args.out)
        if args.command == "estimate":
            return cmd_estimate(args.series, args.event_tick, args.night_mask,
                                args.smoothing_window)
        if args.command == "validate":
            return cmd_validate(args.series_a, args.series_b, args.max_lag, args.out)
        if args.command == "sweep":
            return cmd_sweep(args.config, args.seeds, args.out, args.jobs)
        raise AssertionError(f"unhandled command {args.command}")
    except ConfigError as exc:
        print(f"tweetsim: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ZeroVarianceError, EstimationError) as exc:
        print(f"tweetsim: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"tweetsim: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"tweetsim: input error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
