"""Statistical verification: goodness of fit, moments, output-space coverage.

Hardening a sampler is only acceptable if the hardened form still has
exactly the right distribution, so every sampler in this package is held
to the same checks: a two-sided Kolmogorov-Smirnov test against the
analytic CDF, moment estimates with explicit tolerance bands, and — for
the attack-facing analysis — a count of distinct representable outputs.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .sampler import SamplerMethod
from .urand import BitSource, check_precision

KS_CRIT_001 = 1.628
KS_CRIT_005 = 1.358

DISTINCT_COUNT_MAX_PRECISION = 16

__all__ = [
    "KS_CRIT_001",
    "KS_CRIT_005",
    "ks_critical_value",
    "ks_statistic",
    "empirical_cdf",
    "MomentSummary",
    "moments",
    "distinct_output_count",
]


def ks_critical_value(n: int, alpha: float = 0.01) -> float:
    """Asymptotic two-sided KS critical value ``c(alpha) / sqrt(n)``.

    Supported levels are 0.01 (c = 1.628) and 0.05 (c = 1.358).
    """
    if n < 1:
        raise ValueError(f"sample count must be positive, got {n}")
    if alpha == 0.01:
        c = KS_CRIT_001
    elif alpha == 0.05:
        c = KS_CRIT_005
    else:
        raise ValueError(f"unsupported significance level {alpha!r}")
    return c / np.sqrt(n)


def ks_statistic(samples, cdf: Callable[[float], float]) -> float:
    """Two-sided Kolmogorov-Smirnov statistic of ``samples`` against ``cdf``.

    Computes ``max(D+, D-)`` with ``D+ = max_i (i/n - F(x_(i)))`` and
    ``D- = max_i (F(x_(i)) - (i-1)/n)`` over the order statistics.  The
    input need not be pre-sorted.
    """
    x = np.sort(np.asarray(list(samples), dtype=float))
    n = x.size
    if n == 0:
        raise ValueError("need at least one sample")
    f = np.asarray([cdf(float(v)) for v in x])
    i = np.arange(1, n + 1, dtype=float)
    d_plus = float(np.max(i / n - f))
    d_minus = float(np.max(f - (i - 1.0) / n))
    return max(d_plus, d_minus)


def empirical_cdf(samples) -> Callable[[float], float]:
    """Right-continuous empirical CDF of ``samples`` as a callable.

    Feeding the result to :func:`ks_statistic` as the reference CDF yields
    the exact two-sample KS statistic between the two sample sets.
    """
    data = np.sort(np.asarray(list(samples), dtype=float))
    if data.size == 0:
        raise ValueError("need at least one sample")
    n = data.size

    def cdf(x: float) -> float:
        return float(np.searchsorted(data, x, side="right")) / n

    return cdf


@dataclass(frozen=True)
class MomentSummary:
    """Sample moments: unbiased mean/variance, standardized third/fourth."""

    count: int
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float


def moments(samples) -> MomentSummary:
    """Summarize the first four moments of ``samples``.

    Variance is the unbiased (n-1) estimator; skewness and excess kurtosis
    are the standardized central moments ``m3 / m2^1.5`` and
    ``m4 / m2**2 - 3``.

    Raises:
        ValueError: with fewer than four samples, or when the sample is
            degenerate (zero variance).
    """
    a = np.asarray(list(samples), dtype=float)
    n = a.size
    if n < 4:
        raise ValueError(f"need at least 4 samples for four moments, got {n}")
    mean = float(a.mean())
    variance = float(a.var(ddof=1))
    d = a - mean
    m2 = float(np.mean(d * d))
    if m2 == 0.0:
        raise ValueError("degenerate sample: zero variance")
    m3 = float(np.mean(d**3))
    m4 = float(np.mean(d**4))
    return MomentSummary(
        count=int(n),
        mean=mean,
        variance=variance,
        skewness=m3 / m2**1.5,
        excess_kurtosis=m4 / (m2 * m2) - 3.0,
    )


def distinct_output_count(
    method: SamplerMethod, p: int, draws: int, src: BitSource
) -> int:
    """Number of distinct output bit patterns over ``draws`` samples.

    Distinctness is by IEEE-754 bit pattern (so 0.0 and -0.0 count
    separately), which is the resolution an attacker observes.  Restricted
    to ``p <= 16`` where exhausting the output space is tractable.
    """
    check_precision(p)
    if p > DISTINCT_COUNT_MAX_PRECISION:
        raise ValueError(
            f"distinct-output census is limited to p <= {DISTINCT_COUNT_MAX_PRECISION}, got {p}"
        )
    if draws < 1:
        raise ValueError(f"draw count must be positive, got {draws}")
    drawer = method.make_drawer(src, p)
    seen = {struct.pack("<d", drawer()) for _ in range(draws)}
    return len(seen)
