"""Independent reference implementations the fast paths are checked against.

Everything here is deliberately written the slow, obvious way (pure Python
loops, breadth-first search, closed-form normal CDF) and must stay
independent of the package internals it verifies.
"""

from __future__ import annotations

import math
from collections import deque


def ccf_oracle(x, y, max_lag):
    """Direct double-loop stationary cross-correlation estimator."""
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sx = math.sqrt(sum((v - mx) ** 2 for v in x) / n)
    sy = math.sqrt(sum((v - my) ** 2 for v in y) / n)
    out = {}
    for k in range(-max_lag, max_lag + 1):
        acc = 0.0
        for t in range(n):
            s = t - k  # pair x_{t-k} with y_t
            if 0 <= s < n:
                acc += (x[s] - mx) * (y[t] - my)
        out[k] = acc / (n * sx * sy)
    return out


def normal_cdf(x, mean=0.0, sd=1.0):
    """Closed-form normal CDF via erf."""
    return 0.5 * (1.0 + math.erf((x - mean) / (sd * math.sqrt(2.0))))


def bfs_ball(sources, radius, half_extent, eight_mode):
    """Cells reachable from the sources in at most ``radius`` BFS steps."""
    if eight_mode:
        moves = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)
                 if (dx, dy) != (0, 0)]
    else:
        moves = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    seen = {(int(x), int(y)) for x, y in sources}
    queue = deque((cell, 0) for cell in seen)
    while queue:
        (x, y), depth = queue.popleft()
        if depth == radius:
            continue
        for dx, dy in moves:
            nxt = (x + dx, y + dy)
            if nxt in seen:
                continue
            if abs(nxt[0]) > half_extent or abs(nxt[1]) > half_extent:
                continue
            seen.add(nxt)
            queue.append((nxt, depth + 1))
    return seen


def event_probability_oracle(dt, d, chance, ndist, alpha=1.0, beta=20.0):
    """Scalar evaluation of the decayed event-tweet probability."""
    return (chance
            * math.pow(max(1.0, float(dt)), -ndist / alpha)
            * math.pow(max(1.0, float(d)), -ndist / beta))
