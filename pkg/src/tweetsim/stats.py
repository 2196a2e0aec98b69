"""Cross-correlation validation of one count series against another.

The estimator is the standard stationary sample cross-correlation: global
means and standard deviations, covariance normalized by n at every lag.  A
positive lag k means the second series repeats the first k ticks later
(y_t = x_{t-k} peaks at +k).  The white-noise significance band 1.96/sqrt(n)
flags lags whose correlation is unlikely under independence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .core import CountSeries

SeriesLike = Union[CountSeries, np.ndarray, list]


class ZeroVarianceError(ValueError):
    """A constant series has no defined correlation."""


def _as_values(series: SeriesLike) -> np.ndarray:
    if isinstance(series, CountSeries):
        return np.asarray(series.values, dtype=float)
    return np.asarray(series, dtype=float)


@dataclass(frozen=True)
class CcfReport:
    """Correlation by lag over -max_lag..+max_lag, with the significance band."""

    lags: tuple
    rho: tuple
    threshold: float
    n: int
    means: Tuple[float, float]

    def rho_at(self, lag: int) -> float:
        return self.rho[self.lags.index(lag)]

    @property
    def significant_fraction(self) -> float:
        exceed = sum(1 for r in self.rho if abs(r) > self.threshold)
        return exceed / len(self.rho)


@dataclass(frozen=True)
class CcfSummary:
    """Headline numbers from a comparison run."""

    n: int
    threshold: float
    rho0: float
    lag0_significant: bool
    significant_fraction: float
    peak_lag: int
    peak_rho: float


def significance_threshold(n: int) -> float:
    """White-noise band: correlations beyond 1.96/sqrt(n) are significant."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 1.96 / math.sqrt(n)


def ccf(x: SeriesLike, y: SeriesLike, max_lag: int) -> CcfReport:
    """Sample cross-correlation of x against y for lags -max_lag..+max_lag.

    Both series must have equal length n >= 2, nonzero variance, and
    max_lag < n.  rho[k] correlates x shifted k ticks into the past against
    y, so a copy of x delayed by 3 ticks peaks at lag +3.
    """
    xv, yv = _as_values(x), _as_values(y)
    if xv.size != yv.size:
        raise ValueError(f"series lengths differ: {xv.size} vs {yv.size}")
    n = int(xv.size)
    if n < 2:
        raise ValueError(f"need series of length >= 2, got {n}")
    if not 0 <= max_lag < n:
        raise ValueError(f"max_lag must satisfy 0 <= max_lag < n ({n}), got {max_lag}")

    mx, my = float(xv.mean()), float(yv.mean())
    xc, yc = xv - mx, yv - my
    sx = math.sqrt(float(np.mean(xc * xc)))
    sy = math.sqrt(float(np.mean(yc * yc)))
    if sx == 0.0:
        raise ZeroVarianceError("first series is constant; correlation undefined")
    if sy == 0.0:
        raise ZeroVarianceError("second series is constant; correlation undefined")

    norm = n * sx * sy
    lags = tuple(range(-max_lag, max_lag + 1))
    rho = []
    for k in lags:
        if k >= 0:
            cov = float(np.dot(xc[:n - k], yc[k:]))
        else:
            cov = float(np.dot(xc[-k:], yc[:n + k]))
        rho.append(cov / norm)
    return CcfReport(lags=lags, rho=tuple(rho),
                     threshold=significance_threshold(n), n=n, means=(mx, my))


def uniform_baseline(n: int, reference: SeriesLike,
                     rng: np.random.Generator) -> CountSeries:
    """Null series: n integers uniform on [1, max(reference)] inclusive."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    ref = _as_values(reference)
    if ref.size == 0:
        raise ValueError("reference series is empty")
    high = int(ref.max())
    values = rng.integers(1, max(high, 1) + 1, size=n)
    return CountSeries(values=values, label="uniform_baseline")


def compare(synthetic: SeriesLike, reference: SeriesLike, max_lag: int) -> CcfSummary:
    """Correlate two series and summarize lag-0 strength and band exceedance."""
    report = ccf(synthetic, reference, max_lag)
    rho0 = report.rho_at(0)
    peak_idx = int(np.argmax(np.abs(report.rho)))
    return CcfSummary(
        n=report.n,
        threshold=report.threshold,
        rho0=rho0,
        lag0_significant=abs(rho0) > report.threshold,
        significant_fraction=report.significant_fraction,
        peak_lag=report.lags[peak_idx],
        peak_rho=report.rho[peak_idx],
    )
