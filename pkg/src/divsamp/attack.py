"""Candidate-elimination attacks on floating-point noise, plus cost models.

The attacks here answer a simple question: given query access to a
protected value plus sampled noise, can the noise be "peeled off" by
inverting the sampler's floating-point arithmetic?  For the naive
inverse-transform Laplace sampler and for raw cached Box-Muller pairs the
answer is yes — the attacker rounds the implied uniform back onto the
sampling grid, re-runs the forward transform over a small neighbourhood,
and eliminates any candidate the arithmetic cannot reproduce exactly.

For the hardened samplers the same procedure eliminates *every*
candidate: their outputs do not lie in the naive sampler's image, so no
grid point reproduces the query and the attack reports that it learned
nothing.  The brute-force search and the check-count model quantify what
inverting a single hardened Gaussian output would cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .dist import laplace_cdf
from .sampler import GaussianStream, bm_cos, bm_radius, bm_sin, naive_laplace_from_variate
from .urand import (
    DEFAULT_PRECISION,
    UniformVariate,
    check_precision,
    neighbors,
    round_to_variate,
)

DEFAULT_WINDOW = 2
DEFAULT_PAIR_WINDOW = 4
BRUTE_FORCE_MAX_PRECISION = 20
TWO_PI = 2.0 * math.pi

__all__ = [
    "DEFAULT_WINDOW",
    "DEFAULT_PAIR_WINDOW",
    "BRUTE_FORCE_MAX_PRECISION",
    "QueryOracle",
    "PhaseAlignmentError",
    "AttackOutcome",
    "mironov_attack",
    "invert_box_muller",
    "gaussian_pair_attack",
    "level_curve_u1",
    "count_feasible_checks",
    "expected_checks",
    "BruteForceResult",
    "brute_force_single_gaussian",
]


class PhaseAlignmentError(RuntimeError):
    """The pair attack was started against a stream holding a cached output."""


class QueryOracle:
    """Query access to a hidden target value plus fresh sampled noise.

    Each call to :meth:`query` returns ``target + noise()`` and bumps
    ``call_count``.  ``stream`` optionally exposes the Gaussian stream
    backing the noise, for attacks that reason about cache phase; leave it
    ``None`` when outputs carry no cross-query state.
    """

    def __init__(
        self,
        target: float,
        noise: Callable[[], float],
        stream: GaussianStream | None = None,
    ) -> None:
        self.target = target
        self._noise = noise
        self.stream = stream
        self.call_count = 0

    def query(self) -> float:
        self.call_count += 1
        return self.target + self._noise()


@dataclass
class AttackOutcome:
    """Result of an elimination attack.

    ``status`` is ``"identified"`` (exactly one candidate survived, in
    ``value``), ``"all_eliminated"`` (no candidate could have produced the
    observed queries — the noise did not come from the assumed sampler), or
    ``"budget_exhausted"``.  ``trace`` records, per oracle round, the query
    value(s) and the candidates eliminated in that round.
    """

    status: str
    value: float | None
    queries_used: int
    trace: list[tuple] = field(default_factory=list)


def _prepare_candidates(candidates) -> list[float]:
    cands = sorted(set(float(c) for c in candidates))
    if not cands:
        raise ValueError("candidate set must be non-empty")
    return cands


def _laplace_survives(q: float, c: float, p: int, w: int, scale: float) -> bool:
    # Round the implied uniform onto the grid, then ask whether any grid
    # point within w steps pushes forward to the query bit-exactly.
    y = (q - c) / scale
    u = round_to_variate(laplace_cdf(y), p)
    for cand in neighbors(u, w):
        if scale * naive_laplace_from_variate(cand) + c == q:
            return True
    return False


def mironov_attack(
    oracle: QueryOracle,
    candidates,
    p: int = DEFAULT_PRECISION,
    w: int = DEFAULT_WINDOW,
    max_queries: int = 100,
    scale: float = 1.0,
) -> AttackOutcome:
    """Eliminate candidates against an oracle assumed to add naive Laplace noise.

    For each query ``q`` and candidate ``c``, the implied uniform
    ``laplace_cdf((q - c) / scale)`` is rounded to the precision-``p``
    grid; ``c`` survives only if some grid point within ``w`` steps
    reproduces ``q`` exactly under the naive sampler's own arithmetic.

    A candidate set that shrinks to one is *not* reported immediately: a
    wrong candidate can pass the reproduction check by coincidence on any
    single query (the naive image is dense enough for that), so the lone
    survivor keeps being challenged until the query budget is spent.  Only
    a candidate that survives every query is reported as identified —
    which the true target does whenever the oracle really adds naive
    Laplace noise, and noise from any other sampler essentially never
    does.  A candidate set that is *passed in* as a singleton returns
    immediately: there is nothing to eliminate.

    Args:
        oracle: source of ``target + scale * noise`` observations.
        candidates: finite iterable of hypothesised target values.
        p: grid precision the attacked sampler is assumed to draw at.
        w: neighbourhood half-width absorbing rounding slack.
        max_queries: cap on oracle calls.
        scale: Laplace scale ``b`` of the oracle's noise.
    """
    check_precision(p)
    if w < 0:
        raise ValueError(f"window must be non-negative, got {w}")
    if not (scale > 0 and math.isfinite(scale)):
        raise ValueError(f"scale must be positive and finite, got {scale!r}")
    cands = _prepare_candidates(candidates)
    if len(cands) == 1:
        return AttackOutcome("identified", cands[0], 0, [])
    trace: list[tuple] = []
    while cands and oracle.call_count < max_queries:
        q = oracle.query()
        survivors = [c for c in cands if _laplace_survives(q, c, p, w, scale)]
        eliminated = [c for c in cands if c not in survivors]
        trace.append((q, eliminated))
        cands = survivors
    if len(cands) == 1:
        return AttackOutcome("identified", cands[0], oracle.call_count, trace)
    if not cands:
        return AttackOutcome("all_eliminated", None, oracle.call_count, trace)
    return AttackOutcome("budget_exhausted", None, oracle.call_count, trace)


def invert_box_muller(n1: float, n2: float) -> tuple[float, float]:
    """Recover the uniform pair behind a full Box-Muller output pair.

    Inverts the polar map: ``u1 = 1 - exp(-(n1² + n2²)/2)`` and ``u2`` from
    the two-argument arctangent of ``(n2, n1)``, normalized into [0, 1).
    The quadrant handling makes the inversion total for any pair except
    the measure-zero origin.

    Raises:
        ValueError: if ``n1 == n2 == 0`` (the radius carries no angle).
    """
    if n1 == 0.0 and n2 == 0.0:
        raise ValueError("cannot invert the origin: angle is undefined")
    u1 = 1.0 - math.exp(-0.5 * (n1 * n1 + n2 * n2))
    u2 = math.atan2(n2, n1) / TWO_PI
    if u2 < 0.0:
        u2 += 1.0
    return u1, u2


def _pair_survives(
    q1: float, q2: float, c: float, p: int, w: int, scale: float
) -> bool:
    n1 = (q1 - c) / scale
    n2 = (q2 - c) / scale
    if n1 == 0.0 and n2 == 0.0:
        # Only the zero-radius grid point reproduces an exact (0, 0) pair.
        return c + scale * bm_cos(0.0, 0.0) == q1 and c + scale * bm_sin(0.0, 0.0) == q2
    u1, u2 = invert_box_muller(n1, n2)
    v1 = round_to_variate(u1, p)
    v2 = round_to_variate(u2, p)
    for a in neighbors(v1, w):
        av = a.value
        for b in neighbors(v2, w):
            bv = b.value
            if c + scale * bm_cos(av, bv) == q1 and c + scale * bm_sin(av, bv) == q2:
                return True
    return False


def gaussian_pair_attack(
    oracle: QueryOracle,
    candidates,
    p: int = DEFAULT_PRECISION,
    w: int = DEFAULT_PAIR_WINDOW,
    max_queries: int = 100,
    scale: float = 1.0,
) -> AttackOutcome:
    """Eliminate candidates by inverting consecutive cached Box-Muller outputs.

    Consumes queries two at a time, treating ``(q1, q2)`` as both halves
    of one Box-Muller evaluation.  For each candidate the implied uniform
    pair is recovered with :func:`invert_box_muller`, rounded to the grid,
    and the candidate survives only if some pair in the ``w``-neighbourhood
    reproduces both queries bit-exactly.  As with :func:`mironov_attack`,
    a lone survivor keeps being challenged until the budget is spent, so
    "identified" means the candidate reproduced every observed pair.  If
    the oracle exposes its stream, a non-empty cache at the first query is
    a phase misalignment and is rejected up front.

    Raises:
        PhaseAlignmentError: if the oracle's stream starts mid-pair.
    """
    check_precision(p)
    if w < 0:
        raise ValueError(f"window must be non-negative, got {w}")
    if not (scale > 0 and math.isfinite(scale)):
        raise ValueError(f"scale must be positive and finite, got {scale!r}")
    if oracle.stream is not None and oracle.stream.phase != "empty":
        raise PhaseAlignmentError(
            "oracle stream holds a cached output; pair alignment would be off by one"
        )
    cands = _prepare_candidates(candidates)
    if len(cands) == 1:
        return AttackOutcome("identified", cands[0], 0, [])
    trace: list[tuple] = []
    while cands and oracle.call_count + 2 <= max_queries:
        q1 = oracle.query()
        q2 = oracle.query()
        survivors = [c for c in cands if _pair_survives(q1, q2, c, p, w, scale)]
        eliminated = [c for c in cands if c not in survivors]
        trace.append(((q1, q2), eliminated))
        cands = survivors
    if len(cands) == 1:
        return AttackOutcome("identified", cands[0], oracle.call_count, trace)
    if not cands:
        return AttackOutcome("all_eliminated", None, oracle.call_count, trace)
    return AttackOutcome("budget_exhausted", None, oracle.call_count, trace)


def level_curve_u1(n1: float, u2: float) -> float:
    """First uniform consistent with cosine-branch output ``n1`` at angle ``u2``.

    Solves the cosine branch for ``u1``: ``1 - exp(-n1² / (2 cos²(2 pi u2)))``.
    Always lies in [0, 1) mathematically; in floats the value saturates to
    1.0 once the exponential underflows (|n1 / cos| beyond roughly 38).

    Raises:
        ValueError: if the cosine factor is exactly zero.
    """
    c = math.cos(TWO_PI * u2)
    if c == 0.0:
        raise ValueError(f"level curve undefined where cos(2 pi u2) == 0 (u2={u2!r})")
    return 1.0 - math.exp(-(n1 * n1) / (2.0 * c * c))


def count_feasible_checks(n1: float, p: int) -> int:
    """Size of the grid region a single-output inversion must search.

    Counts the precision-``p`` grid points in ``[1 - exp(-n1²/2), 1)`` —
    the only ``u1`` values whose radial factor can reach ``|n1|``.  This is
    the exact per-draw work factor of :func:`brute_force_single_gaussian`.
    """
    check_precision(p)
    if not math.isfinite(n1):
        raise ValueError(f"need a finite output value, got {n1!r}")
    scale = 1 << p
    lower = 1.0 - math.exp(-0.5 * n1 * n1)
    return scale - math.ceil(lower * scale)


def expected_checks(p: int) -> float:
    """Expected search size ``2**(p - 1/2)`` for a standard-normal output.

    Averaging ``exp(-n²/2)`` over the standard normal gives ``1/sqrt(2)``,
    so the feasible region holds ``2**p / sqrt(2)`` grid points on average.
    """
    check_precision(p)
    return 2.0 ** (p - 0.5)


@dataclass
class BruteForceResult:
    """Outcome of a full single-output search.

    ``pairs`` holds every grid pair whose forward cosine-branch evaluation
    reproduces the target bit-exactly; ``checks`` counts the ``u1``
    candidates examined, the cost measure the search-size model predicts.
    """

    pairs: list[tuple[UniformVariate, UniformVariate]]
    checks: int


def brute_force_single_gaussian(
    n1: float, p: int, w: int = DEFAULT_WINDOW
) -> BruteForceResult:
    """Recover every uniform pair that maps to cosine-branch output ``n1``.

    Walks the feasible ``u1`` window (padded by ``w`` grid steps below its
    analytic edge to absorb boundary rounding).  For each ``u1`` the angle
    is recovered from ``n1 / radius``; both arccos branches are rounded to
    the grid and the ``w``-neighbourhood of each is re-evaluated forward,
    keeping pairs that reproduce ``n1`` exactly.  Restricted to ``p <= 20``
    — the window size grows as ``2**(p - 1/2)``.

    Raises:
        ValueError: if ``p`` exceeds the tractability bound or ``n1`` is
            not finite.
    """
    check_precision(p)
    if p > BRUTE_FORCE_MAX_PRECISION:
        raise ValueError(
            f"brute force is limited to p <= {BRUTE_FORCE_MAX_PRECISION}, got {p}"
        )
    if not math.isfinite(n1):
        raise ValueError(f"need a finite output value, got {n1!r}")
    if w < 0:
        raise ValueError(f"window must be non-negative, got {w}")

    size = 1 << p
    top = size - 1
    pairs: list[tuple[UniformVariate, UniformVariate]] = []
    checks = 0

    if n1 == 0.0:
        # Zero radius: u1 = 0 reproduces 0.0 for every angle, and no
        # positive radius can (cos never vanishes exactly on the grid).
        # The whole unit interval is feasible, so every u1 is examined.
        checks = size
        for m2 in range(size):
            u2 = UniformVariate(m2, p)
            if bm_cos(0.0, u2.value) == n1:
                pairs.append((UniformVariate(0, p), u2))
        for m1 in range(1, size):
            u1 = UniformVariate(m1, p)
            r = bm_radius(u1.value)
            for m2 in (size // 4, 3 * size // 4):  # angles nearest the zero crossings
                u2 = UniformVariate(m2, p)
                if r * math.cos(TWO_PI * u2.value) == n1:  # pragma: no cover
                    pairs.append((u1, u2))
        return BruteForceResult(pairs, checks)

    lo = size - count_feasible_checks(n1, p)
    start = max(0, lo - w)
    ldexp = math.ldexp
    acos = math.acos
    cos = math.cos
    for m1 in range(start, size):
        checks += 1
        u1_val = ldexp(m1, -p)
        r = bm_radius(u1_val)
        if r == 0.0:
            continue
        t = n1 / r
        if abs(t) > 1.0:
            if abs(t) > 1.0 + 1e-12:
                continue
            t = math.copysign(1.0, t)
        theta = acos(t)
        m2_seen: set[int] = set()
        for u2_real in (theta / TWO_PI, 1.0 - theta / TWO_PI):
            center = round(ldexp(u2_real, p))
            for m2 in range(center - w, center + w + 1):
                if m2 < 0 or m2 > top or m2 in m2_seen:
                    continue
                m2_seen.add(m2)
                if r * cos(TWO_PI * ldexp(m2, -p)) == n1:
                    pairs.append((UniformVariate(m1, p), UniformVariate(m2, p)))
    return BruteForceResult(pairs, checks)
