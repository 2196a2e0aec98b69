"""Derive behavioral parameters from a real tweet-count series.

The series is split into three segments: low-activity (night) ticks, routine
ticks before the event, and ticks from the event onward.  The three gate
probabilities are the segment means normalized by their sum, so they always
add up to 1 and are invariant to rescaling the counts.  Event duration is
the run of post-event ticks whose smoothed counts stay above the pre-event
mean, with night ticks bridged rather than terminating the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core import CountSeries


class EstimationError(ValueError):
    """The series cannot support the requested estimate (e.g. empty segment)."""


@dataclass(frozen=True)
class SegmentStats:
    """Per-segment mean counts plus the night mask that produced them."""

    tweets_night: float
    tweets_pre_event: float
    tweets_post_event: float
    night_mask: np.ndarray


def _as_values(series) -> np.ndarray:
    if isinstance(series, CountSeries):
        return np.asarray(series.values, dtype=float)
    return np.asarray(series, dtype=float)


def auto_night_mask(series, min_run: int = 4) -> np.ndarray:
    """Heuristic low-activity mask: sustained runs of bottom-quartile counts.

    A tick is night when its count is at or below the 25th percentile of the
    whole series and it sits in a run of at least ``min_run`` such ticks
    (half a typical 8-tick low-activity window).
    """
    values = _as_values(series)
    low = values <= np.percentile(values, 25)
    mask = np.zeros(values.size, dtype=bool)
    start = None
    for i, flag in enumerate(np.append(low, False)):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            if i - start >= min_run:
                mask[start:i] = True
            start = None
    return mask


def segment_series(series, event_tick: int,
                   night_mask: Optional[np.ndarray] = None,
                   min_night_run: int = 4) -> SegmentStats:
    """Split the series at ``event_tick`` and average each segment.

    ``night_mask`` marks low-activity ticks explicitly; when omitted it is
    detected with :func:`auto_night_mask`.  Pre-event and post-event segments
    exclude night ticks, and every tick lands in exactly one segment.
    """
    values = _as_values(series)
    n = values.size
    if n < 3:
        raise EstimationError(f"need a series of length >= 3, got {n}")
    if not 0 < event_tick < n:
        raise EstimationError(
            f"event_tick must satisfy 0 < event_tick < {n}, got {event_tick}")

    if night_mask is None:
        night = auto_night_mask(values, min_run=min_night_run)
    else:
        night = np.asarray(night_mask, dtype=bool)
        if night.size != n:
            raise EstimationError(
                f"night mask length {night.size} does not match series length {n}")

    ticks = np.arange(n)
    pre = (ticks < event_tick) & ~night
    post = (ticks >= event_tick) & ~night
    for name, mask in (("night", night), ("pre-event", pre), ("post-event", post)):
        if not mask.any():
            raise EstimationError(f"{name} segment is empty")
    return SegmentStats(
        tweets_night=float(values[night].mean()),
        tweets_pre_event=float(values[pre].mean()),
        tweets_post_event=float(values[post].mean()),
        night_mask=night,
    )


def estimate_probabilities(stats: SegmentStats) -> Tuple[float, float, float]:
    """(tweet_chance, event_tweet_chance, night_tweet_chance) from segment means.

    Each chance is its segment mean over the sum of the three means, so the
    triple sums to 1.
    """
    denom = stats.tweets_night + stats.tweets_pre_event + stats.tweets_post_event
    if denom <= 0:
        raise EstimationError("all segment means are zero; probabilities undefined")
    return (stats.tweets_pre_event / denom,
            stats.tweets_post_event / denom,
            stats.tweets_night / denom)


def _smoothed(values: np.ndarray, night: np.ndarray, window: int) -> np.ndarray:
    """Centered moving average over non-night ticks only.

    Night counts would drag the average down at window edges, so they are
    excluded from every window; a window with no day ticks yields NaN.
    """
    day = (~night).astype(float)
    kernel = np.ones(window)
    sums = np.convolve(values * day, kernel, mode="same")
    counts = np.convolve(day, kernel, mode="same")
    with np.errstate(invalid="ignore"):
        return np.where(counts > 0, sums / counts, np.nan)


def estimate_event_duration(series, event_tick: int, stats: SegmentStats,
                            smoothing_window: int = 3) -> int:
    """Ticks from the event onset until smoothed counts return to pre-event level.

    Walks forward from ``event_tick``; the run continues through every night
    tick (bridged) and through every day tick whose smoothed count exceeds
    the pre-event mean, and ends at the first day tick that fails.  Returns 0
    when the first day tick already fails, and the remaining horizon when
    the counts never come back down.
    """
    if smoothing_window < 1 or smoothing_window % 2 == 0:
        raise EstimationError(
            f"smoothing_window must be a positive odd integer, got {smoothing_window}")
    values = _as_values(series)
    n = values.size
    if not 0 <= event_tick < n:
        raise EstimationError(
            f"event_tick must satisfy 0 <= event_tick < {n}, got {event_tick}")
    night = np.asarray(stats.night_mask, dtype=bool)
    smoothed = _smoothed(values, night, smoothing_window)

    t = event_tick
    while t < n:
        if not night[t] and not (np.isfinite(smoothed[t])
                                 and smoothed[t] > stats.tweets_pre_event):
            break
        t += 1
    return t - event_tick
