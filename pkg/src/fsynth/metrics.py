"""Repair quality metrics: capped edit distance and data recovery."""

from __future__ import annotations

EXCEEDED = "exceeded-threshold"
DEFAULT_CAP = 750


def levenshtein(a: bytes, b: bytes, cap: int = DEFAULT_CAP) -> int | str:
    """Unit-cost edit distance, or ``EXCEEDED`` when it is larger than ``cap``.

    Only cells within ``cap`` of the diagonal can hold values ``<= cap``,
    so each row is computed on that band: O(len * cap) time.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if len(a) < len(b):
        a, b = b, a
    n, m = len(a), len(b)
    if n - m > cap:
        return EXCEEDED
    if m == 0:
        return n
    big = cap + 1
    # prev[j] holds row i-1; cells outside the band stay at `big`
    prev = [j if j <= cap else big for j in range(m + 1)]
    for i in range(1, n + 1):
        lo = max(1, i - cap)
        hi = min(m, i + cap)
        cur = [big] * (m + 1)
        if i <= cap:
            cur[0] = i
        ai = a[i - 1]
        best = cur[0] if lo == 1 else big
        for j in range(lo, hi + 1):
            cost = prev[j - 1] + (ai != b[j - 1])
            up = prev[j] + 1
            left = cur[j - 1] + 1
            v = cost if cost < up else up
            if left < v:
                v = left
            if v > big:
                v = big
            cur[j] = v
            if v < best:
                best = v
        if best > cap:
            return EXCEEDED
        prev = cur
    d = prev[m]
    return d if d <= cap else EXCEEDED


def recovery_pct(repaired: bytes, original_valid: bytes) -> float:
    """Repaired size as a percentage of the original valid size."""
    if not original_valid:
        raise ValueError("original input must not be empty")
    return 100.0 * len(repaired) / len(original_valid)
