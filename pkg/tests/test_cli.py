"""Command-line surface: subcommands, file outputs, exit codes."""

import json
import math

import numpy as np
import pytest

from tweetsim import CountSeries, config_to_dict, night_mask, scenario_config
from tweetsim import seriesio
from tweetsim.cli import EXIT_CONFIG, EXIT_IO, EXIT_NUMERIC, EXIT_OK, main

from conftest import routine_config
from oracles import normal_cdf


def _write_config(tmp_path, cfg, name="config.json"):
    path = tmp_path / name
    seriesio.save_config(path, cfg)
    return path


def _scenario(tmp_path, **kwargs):
    cfg = scenario_config("virginia_beach", **kwargs)
    return _write_config(tmp_path, cfg), cfg


# --- simulate ---------------------------------------------------------------

def test_simulate_writes_rows_and_manifest(tmp_path):
    config_path, cfg = _scenario(tmp_path, seed=1)
    out = tmp_path / "run.csv"
    assert main(["simulate", "--config", str(config_path),
                 "--out", str(out)]) == EXIT_OK
    records, event_tick = seriesio.read_tick_table(out)
    assert len(records) == cfg.total_ticks
    assert event_tick == cfg.event_tick
    manifest = json.loads((tmp_path / "run.manifest.json").read_text())
    assert manifest["config"] == config_to_dict(cfg)
    assert "# manifest=run.manifest.json" in out.read_text()


def test_simulate_identical_bytes_across_runs(tmp_path):
    config_path, _ = _scenario(tmp_path, seed=3)
    outs = []
    for sub in ("first", "second"):
        out = tmp_path / sub / "run.csv"
        out.parent.mkdir()
        assert main(["simulate", "--config", str(config_path),
                     "--out", str(out)]) == EXIT_OK
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_simulate_seed_flag_overrides_config(tmp_path):
    config_path, _ = _scenario(tmp_path, seed=3)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["simulate", "--config", str(config_path), "--out", str(a)])
    main(["simulate", "--config", str(config_path), "--seed", "4",
          "--out", str(b)])
    assert a.read_bytes() != b.read_bytes()
    manifest = json.loads((tmp_path / "b.manifest.json").read_text())
    assert manifest["seed"] == 4


def test_simulate_reproducible_from_manifest(tmp_path):
    config_path, _ = _scenario(tmp_path, seed=8)
    first = tmp_path / "run.csv"
    main(["simulate", "--config", str(config_path), "--out", str(first)])
    again = tmp_path / "redo" / "run.csv"
    again.parent.mkdir()
    assert main(["simulate", "--config", str(tmp_path / "run.manifest.json"),
                 "--out", str(again)]) == EXIT_OK
    assert first.read_bytes() == again.read_bytes()


def test_simulate_missing_config_names_path(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    code = main(["simulate", "--config", str(missing),
                 "--out", str(tmp_path / "x.csv")])
    assert code == EXIT_IO
    assert "nope.json" in capsys.readouterr().err


def test_simulate_invalid_config_exits_config_code(tmp_path):
    doc = config_to_dict(scenario_config("virginia_beach"))
    doc["probability"] = 1.5
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["simulate", "--config", str(path),
                 "--out", str(tmp_path / "x.csv")]) == EXIT_CONFIG


# --- estimate ---------------------------------------------------------------

def test_estimate_plateau_duration_and_ratios(tmp_path, capsys):
    n, e = 200, 50
    mask = night_mask(n, 24, 8)
    values = np.where(mask, 5, 100)
    values[e:e + 48][~mask[e:e + 48]] = 300
    path = tmp_path / "series.csv"
    seriesio.write_series(path, CountSeries(values=values, event_tick=e),
                          night_mask=mask)
    assert main(["estimate", str(path)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert abs(result["event_duration"] - 48) <= 3
    total = (result["tweet_chance"] + result["event_tweet_chance"]
             + result["night_tweet_chance"])
    assert total == pytest.approx(1.0, abs=1e-5)

    assert main(["estimate", str(path), "--smoothing-window", "5"]) == EXIT_OK
    wider = json.loads(capsys.readouterr().out)
    assert abs(wider["event_duration"] - 48) <= 5
    assert main(["estimate", str(path), "--smoothing-window", "2"]) == EXIT_NUMERIC


def test_estimate_equal_means_gives_thirds(tmp_path, capsys):
    values = np.full(48, 60)
    mask = night_mask(48, 24, 8)
    path = tmp_path / "flat.csv"
    seriesio.write_series(path, CountSeries(values=values), night_mask=mask)
    assert main(["estimate", str(path), "--event-tick", "30"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    for key in ("tweet_chance", "event_tweet_chance", "night_tweet_chance"):
        assert result[key] == pytest.approx(1 / 3, abs=1e-5)
    assert result["event_duration"] == 0


def test_estimate_zero_series_is_numeric_error(tmp_path):
    path = tmp_path / "zeros.csv"
    mask = night_mask(24, 24, 8)
    seriesio.write_series(path, CountSeries(values=np.zeros(24, dtype=int)),
                          night_mask=mask)
    assert main(["estimate", str(path), "--event-tick", "10"]) == EXIT_NUMERIC


def test_estimate_requires_event_tick(tmp_path):
    path = tmp_path / "series.csv"
    seriesio.write_series(path, CountSeries(values=np.arange(1, 30)))
    assert main(["estimate", str(path)]) == EXIT_CONFIG


def test_estimate_night_mask_modes(tmp_path, capsys):
    n = 96
    mask = night_mask(n, 24, 8)
    values = np.where(mask, 2, 50)
    values[50:60] = 200
    path = tmp_path / "series.csv"
    seriesio.write_series(path, CountSeries(values=values, event_tick=50),
                          night_mask=mask)
    assert main(["estimate", str(path), "--night-mask", "auto"]) == EXIT_OK
    auto_out = json.loads(capsys.readouterr().out)
    assert main(["estimate", str(path), "--night-mask", "file"]) == EXIT_OK
    file_out = json.loads(capsys.readouterr().out)
    assert auto_out == file_out  # troughs are unambiguous here
    # a series file without the night column cannot satisfy --night-mask file
    bare = tmp_path / "bare.csv"
    seriesio.write_series(bare, CountSeries(values=values, event_tick=50))
    assert main(["estimate", str(bare), "--night-mask", "file"]) == EXIT_CONFIG


# --- validate ---------------------------------------------------------------

def test_validate_self_correlation(tmp_path, capsys):
    rng = np.random.default_rng(0)
    series = CountSeries(values=rng.integers(1, 50, 100))
    path = tmp_path / "s.csv"
    seriesio.write_series(path, series)
    assert main(["validate", str(path), str(path), "--max-lag", "5"]) == EXIT_OK
    out = capsys.readouterr().out
    summary = [ln for ln in out.splitlines() if ln.startswith("n=")][0]
    assert "rho0=1.000000" in summary
    assert "lag0_significant=True" in summary


def test_validate_writes_report_table(tmp_path):
    rng = np.random.default_rng(1)
    series = CountSeries(values=rng.integers(1, 50, 80))
    path = tmp_path / "s.csv"
    seriesio.write_series(path, series)
    report_path = tmp_path / "report.csv"
    assert main(["validate", str(path), str(path), "--max-lag", "3",
                 "--out", str(report_path)]) == EXIT_OK
    lines = report_path.read_text().splitlines()
    assert "lag,rho" in lines
    assert len([ln for ln in lines if not ln.startswith(("#", "lag"))]) == 7


def test_validate_length_mismatch_fails(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    seriesio.write_series(a, CountSeries(values=np.arange(1, 30)))
    seriesio.write_series(b, CountSeries(values=np.arange(1, 20)))
    assert main(["validate", str(a), str(b)]) != EXIT_OK


def test_validate_constant_series_is_numeric_error(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    seriesio.write_series(a, CountSeries(values=np.full(30, 7)))
    seriesio.write_series(b, CountSeries(values=np.arange(1, 31)))
    assert main(["validate", str(a), str(b), "--max-lag", "3"]) == EXIT_NUMERIC


# --- sweep --------------------------------------------------------------------

def test_sweep_produces_per_seed_files_and_summary(tmp_path):
    config_path, cfg = _scenario(tmp_path, total_ticks=24, event_tick=4)
    out_dir = tmp_path / "sweep"
    assert main(["sweep", "--config", str(config_path), "--seeds", "1..10",
                 "--out", str(out_dir)]) == EXIT_OK
    files = sorted(out_dir.glob("run_seed*.csv"))
    assert len(files) == 10
    assert (out_dir / "summary.csv").exists()
    summary = (out_dir / "summary.csv").read_text().splitlines()
    data = [ln for ln in summary if not ln.startswith(("#", "tick"))]
    assert len(data) == cfg.total_ticks


def test_sweep_mean_matches_routine_rate(tmp_path):
    cfg = routine_config(people=1000, total_ticks=30)
    config_path = _write_config(tmp_path, cfg)
    out_dir = tmp_path / "sweep"
    assert main(["sweep", "--config", str(config_path), "--seeds", "1..8",
                 "--out", str(out_dir)]) == EXIT_OK
    rows = [(int(t), float(m)) for t, m, _ in
            (ln.split(",") for ln in
             (out_dir / "summary.csv").read_text().splitlines()
             if not ln.startswith(("#", "tick")))]
    grand_mean = np.mean([m for _, m in rows])
    expected = 1000 * normal_cdf(0.33, 0.7, math.sqrt(0.2))
    se = math.sqrt(expected * (1 - expected / 1000) / (30 * 8))
    assert abs(grand_mean - expected) <= 4 * se


def test_sweep_empty_range_rejected(tmp_path, capsys):
    config_path, _ = _scenario(tmp_path)
    assert main(["sweep", "--config", str(config_path), "--seeds", "9..3",
                 "--out", str(tmp_path / "out")]) == EXIT_CONFIG
    assert "seeds" in capsys.readouterr().err


def test_sweep_bad_range_syntax(tmp_path):
    config_path, _ = _scenario(tmp_path)
    assert main(["sweep", "--config", str(config_path), "--seeds", "5",
                 "--out", str(tmp_path / "out")]) == EXIT_CONFIG


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
