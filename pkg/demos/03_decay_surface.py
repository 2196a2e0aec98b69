"""How the event-tweet probability decays with time and distance.

Tabulates q(t, d) for the three scenario decay scales.  The slow decays
(small ndist) keep users tweeting about the event for days; the
garlic-festival scale (ndist=2) collapses within a couple of ticks, which is
what its short crowd-driven spike calls for.
"""

import numpy as np

import tweetsim as ts


def main():
    elapsed = [0, 1, 2, 5, 10, 24, 48]
    distances = [0, 5, 15, 30]

    for name in ts.SCENARIO_NAMES:
        v = ts.VARIABLE_PRESETS[name]
        print(f"\n{name}: event_tweet_chance={v.event_tweet_chance}, "
              f"ndist={v.ndist}")
        header = "  t-t0 | " + "".join(f"d={d:<8}" for d in distances)
        print(header)
        print("  " + "-" * (len(header) - 2))
        for dt in elapsed:
            q = ts.event_tweet_probability(
                dt, 0, np.array(distances, dtype=float),
                v.event_tweet_chance, v.ndist)
            print(f"  {dt:4d} | " + "".join(f"{x:<10.4f}" for x in q))

    print("\nthe immediate vicinity (t-t0 <= 1, d <= 1) always sees the full "
          "configured chance;\nboth axes decay monotonically from there.")


if __name__ == "__main__":
    main()
