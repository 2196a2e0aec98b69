"""File formats: configs, tick tables, count series, manifests, debug dumps.

Three tabular text formats, all comma-separated with a header row and
optional ``# key=value`` metadata lines on top:

* tick table (simulation output): ``tick,standard,event,night,
  standard_retweet,event_retweet,total,ring_1..ring_k``;
* count series: ``tick,count[,night]``, dense ticks from 0 (gaps are filled
  with zeros and reported with a warning);
* agent / edge debug dumps from the setup phase.

Configs are flat JSON documents (see core.CONFIG_KEYS); a run manifest wraps
a config snapshot with seed, timestamps, tool version and output paths, and
is accepted anywhere a config is, so any run can be reproduced from its
manifest alone.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from . import __version__
from .core import (ConfigError, CountSeries, SimulationConfig, config_from_dict,
                   config_to_dict)
from .engine import TickRecord


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce one run bit-exactly."""

    config: SimulationConfig
    seed: int
    started_utc: str
    finished_utc: str
    outputs: tuple = field(default_factory=tuple)
    version: str = __version__

TICK_TABLE_COLUMNS = ("tick", "standard", "event", "night",
                      "standard_retweet", "event_retweet", "total")


def _parse_metadata(lines: List[str]) -> dict:
    meta = {}
    for line in lines:
        body = line.lstrip("#").strip()
        if "=" in body:
            key, value = body.split("=", 1)
            meta[key.strip()] = value.strip()
    return meta


def _read_table(path) -> Tuple[dict, List[str], List[List[str]]]:
    text = Path(path).read_text().splitlines()
    meta_lines = [ln for ln in text if ln.startswith("#")]
    rows = [ln.strip() for ln in text if ln.strip() and not ln.startswith("#")]
    if not rows:
        raise ValueError(f"{path}: no data rows")
    header = [c.strip() for c in rows[0].split(",")]
    data = [[c.strip() for c in ln.split(",")] for ln in rows[1:]]
    return _parse_metadata(meta_lines), header, data


def write_tick_table(path, records: List[TickRecord],
                     event_tick: Optional[int] = None,
                     manifest_name: Optional[str] = None) -> None:
    """Write one row per tick plus per-ring sensor counts."""
    n_rings = len(records[0].ring_counts) if records else 0
    header = list(TICK_TABLE_COLUMNS) + [f"ring_{k + 1}" for k in range(n_rings)]
    lines = [f"# tweetsim={__version__}"]
    if manifest_name is not None:
        lines.append(f"# manifest={manifest_name}")
    lines.append(f"# event_tick={'none' if event_tick is None else event_tick}")
    lines.append(",".join(header))
    for r in records:
        row = [r.tick, r.standard, r.event, r.night, r.standard_retweet,
               r.event_retweet, r.total, *r.ring_counts]
        lines.append(",".join(str(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def read_tick_table(path) -> Tuple[List[TickRecord], Optional[int]]:
    """Read a tick table back into records plus the recorded event tick."""
    meta, header, data = _read_table(path)
    if header[:7] != list(TICK_TABLE_COLUMNS):
        raise ValueError(f"{path}: not a tick table (header {header[:7]})")
    n_rings = len(header) - 7
    records = []
    for row in data:
        values = [int(v) for v in row]
        records.append(TickRecord(
            tick=values[0], standard=values[1], event=values[2], night=values[3],
            standard_retweet=values[4], event_retweet=values[5], total=values[6],
            ring_counts=tuple(values[7:7 + n_rings])))
    raw = meta.get("event_tick")
    event_tick = None if raw in (None, "none", "") else int(raw)
    return records, event_tick


def write_series(path, series: CountSeries,
                 night_mask: Optional[np.ndarray] = None) -> None:
    """Write a ``tick,count[,night]`` series file."""
    lines = [f"# tweetsim={__version__}"]
    if series.event_tick is not None:
        lines.append(f"# event_tick={series.event_tick}")
    if series.label:
        lines.append(f"# label={series.label}")
    header = "tick,count" + (",night" if night_mask is not None else "")
    lines.append(header)
    for t, v in enumerate(series.values):
        row = f"{t},{int(v)}"
        if night_mask is not None:
            row += f",{int(bool(night_mask[t]))}"
        lines.append(row)
    Path(path).write_text("\n".join(lines) + "\n")


def read_series(path) -> Tuple[CountSeries, Optional[np.ndarray]]:
    """Read a count series and its optional night-mask column.

    Accepts both the ``tick,count[,night]`` format and a simulation tick
    table (whose ``total`` column is used).  Ticks must start at 0; missing
    ticks are filled with zero counts and reported with a warning.
    """
    meta, header, data = _read_table(path)
    if header[:7] == list(TICK_TABLE_COLUMNS):
        count_col, night_col = header.index("total"), None
    else:
        if "tick" not in header or "count" not in header:
            raise ValueError(f"{path}: expected 'tick,count[,night]' columns, "
                             f"got {header}")
        count_col = header.index("count")
        night_col = header.index("night") if "night" in header else None
    tick_col = header.index("tick")

    ticks = np.array([int(r[tick_col]) for r in data])
    counts = np.array([int(r[count_col]) for r in data])
    if ticks.size != np.unique(ticks).size:
        raise ValueError(f"{path}: duplicate ticks")
    night = None
    if night_col is not None:
        night = np.array([bool(int(r[night_col])) for r in data])

    n = int(ticks.max()) + 1
    if ticks.min() != 0 or ticks.size != n:
        dense = np.zeros(n, dtype=np.int64)
        dense[ticks] = counts
        missing = n - ticks.size + int(ticks.min())
        warnings.warn(f"{path}: {missing} missing tick(s) filled with 0")
        counts = dense
        if night is not None:
            dense_night = np.zeros(n, dtype=bool)
            dense_night[ticks] = night
            night = dense_night
    else:
        order = np.argsort(ticks)
        counts = counts[order]
        if night is not None:
            night = night[order]

    raw = meta.get("event_tick")
    event_tick = None if raw in (None, "none", "") else int(raw)
    series = CountSeries(values=counts, event_tick=event_tick,
                         label=meta.get("label", str(path)))
    return series, night


def write_ccf_report(path, report) -> None:
    """Dump a correlation report as a plottable (lag, rho) table."""
    lines = [f"# tweetsim={__version__}",
             f"# n={report.n}",
             f"# threshold={report.threshold!r}",
             "lag,rho"]
    for lag, rho in zip(report.lags, report.rho):
        lines.append(f"{lag},{rho!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def save_config(path, config: SimulationConfig) -> None:
    Path(path).write_text(json.dumps(config_to_dict(config), indent=2) + "\n")


def load_config(path) -> SimulationConfig:
    """Load a config document; run manifests are accepted transparently."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(str(path), f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(str(path), "config document must be a JSON object")
    if "config" in doc and isinstance(doc["config"], dict):
        doc = doc["config"]  # manifest wrapper
    return config_from_dict(doc)


def write_manifest(path, config: SimulationConfig, outputs: List[str],
                   started_utc: str, finished_utc: str) -> None:
    """Snapshot everything needed to reproduce a run bit-exactly."""
    doc = {
        "tool": "tweetsim",
        "version": __version__,
        "seed": config.seed,
        "started_utc": started_utc,
        "finished_utc": finished_utc,
        "outputs": list(outputs),
        "config": config_to_dict(config),
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def read_manifest(path) -> RunManifest:
    doc = json.loads(Path(path).read_text())
    if "config" not in doc:
        raise ConfigError(str(path), "not a run manifest (no config snapshot)")
    return RunManifest(
        config=config_from_dict(doc["config"]),
        seed=int(doc["seed"]),
        started_utc=doc.get("started_utc", ""),
        finished_utc=doc.get("finished_utc", ""),
        outputs=tuple(doc.get("outputs", ())),
        version=doc.get("version", ""),
    )


def write_agents_table(path, agents: list) -> None:
    """Debug dump of the setup phase: one row per agent."""
    lines = ["id,x,y,clustered"]
    for a in agents:
        lines.append(f"{a.id},{a.position.x},{a.position.y},{int(a.clustered)}")
    Path(path).write_text("\n".join(lines) + "\n")


def write_edges_table(path, network) -> None:
    """Debug dump of the follower network: one row per undirected link."""
    lines = ["id_a,id_b"]
    for i, j in network.edges:
        lines.append(f"{int(i)},{int(j)}")
    Path(path).write_text("\n".join(lines) + "\n")
