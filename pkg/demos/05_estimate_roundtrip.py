"""Estimate behavioral parameters back from a generated series.

Simulates one scenario, then feeds only its total-count series (plus the
true night mask and event tick) to the estimator.  The recovered ratios
track the realized segment means, not the configured gate probabilities:
retweet cascades reshape the magnitudes, which is why estimates from real
traffic are ratios of observed activity in the first place.  The printed
JSON fragment is config syntax and can be merged straight into a run config.
"""

import json

import numpy as np

import tweetsim as ts


def main():
    name = "virginia_beach"
    cfg = ts.scenario_config(name, seed=5)
    records = ts.run(cfg)
    series = ts.records_to_series(records, event_tick=cfg.event_tick)
    mask = ts.night_mask(cfg.total_ticks, cfg.fixed.day_length,
                         cfg.variable.night_duration)

    stats = ts.segment_series(series, cfg.event_tick, night_mask=mask)
    print(f"{name} run, segment means:")
    print(f"  night      {stats.tweets_night:8.1f}")
    print(f"  pre-event  {stats.tweets_pre_event:8.1f}")
    print(f"  post-event {stats.tweets_post_event:8.1f}")

    tweet_chance, event_tweet_chance, night_tweet_chance = \
        ts.estimate_probabilities(stats)
    duration = ts.estimate_event_duration(series, cfg.event_tick, stats)

    fragment = {
        "tweet_chance": round(tweet_chance, 4),
        "event_duration": duration,
        "event_tweet_chance": round(event_tweet_chance, 4),
        "night_tweet_chance": round(night_tweet_chance, 4),
    }
    print("\nestimated parameter fragment (config syntax):")
    print(json.dumps(fragment, indent=2))
    print(f"\nconfigured values were tweet_chance={cfg.variable.tweet_chance}, "
          f"event_duration={cfg.variable.event_duration}, "
          f"event_tweet_chance={cfg.variable.event_tweet_chance}, "
          f"night_tweet_chance={cfg.variable.night_tweet_chance}")

    # sanity: the estimates match the realized ratios by construction
    totals = series.values.astype(float)
    ticks = np.arange(len(series))
    realized = np.array([
        totals[(ticks < cfg.event_tick) & ~mask].mean(),
        totals[(ticks >= cfg.event_tick) & ~mask].mean(),
        totals[mask].mean(),
    ])
    realized /= realized.sum()
    print(f"realized segment ratios: {np.round(realized, 4).tolist()}")


if __name__ == "__main__":
    main()
