"""Finite-precision uniform variates and the bit sources that feed them.

Samplers in this package never consume raw floats from a platform RNG.
They consume :class:`UniformVariate` values: dyadic rationals ``m * 2**-p``
with an integer numerator drawn from a :class:`BitSource`.  Working on the
numerator keeps every grid operation (rounding, neighbourhoods, bit splits)
exact, which is what the inversion attacks and the hardened samplers both
rely on.
"""

from __future__ import annotations

import math
import random
import secrets
from dataclasses import dataclass

MAX_PRECISION = 53
DEFAULT_PRECISION = 53

__all__ = [
    "MAX_PRECISION",
    "DEFAULT_PRECISION",
    "EntropyError",
    "UniformVariate",
    "BitSource",
    "next_uniform",
    "round_to_multiple",
    "round_to_variate",
    "neighbors",
]


class EntropyError(RuntimeError):
    """The OS entropy source failed while a secure draw was in progress."""


def check_precision(p: int) -> int:
    """Validate a grid precision, returning it unchanged.

    Args:
        p: number of uniform bits per variate; must be an integer in
            ``[1, 53]`` so that every grid point is exactly representable
            as a double.

    Raises:
        ValueError: if ``p`` is out of range or not integral.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"precision must be an integer, got {p!r}")
    if not 1 <= p <= MAX_PRECISION:
        raise ValueError(f"precision must be in [1, {MAX_PRECISION}], got {p}")
    return p


@dataclass(frozen=True)
class UniformVariate:
    """A uniform draw on the dyadic grid ``{m * 2**-p : 0 <= m < 2**p}``.

    The numerator is the ground truth; ``value`` is the exact float it
    denotes.  For ``p <= 53`` the conversion is lossless.
    """

    m: int
    p: int

    def __post_init__(self) -> None:
        check_precision(self.p)
        if not isinstance(self.m, int) or isinstance(self.m, bool):
            raise ValueError(f"numerator must be an integer, got {self.m!r}")
        if not 0 <= self.m < (1 << self.p):
            raise ValueError(
                f"numerator {self.m} out of range [0, 2**{self.p}) for precision {self.p}"
            )

    @property
    def value(self) -> float:
        """The exact real value ``m * 2**-p`` as a double."""
        return math.ldexp(self.m, -self.p)


class BitSource:
    """Uniform random bits, either OS-entropy backed or seeded.

    With ``seed=None`` bits come from the operating system's entropy pool
    (suitable when draws must be unpredictable).  With an integer seed,
    bits come from a deterministic high-quality generator (Mersenne
    Twister) so that experiments replay bit-identically; this generator is
    deliberately distinct from the secure one.

    Attributes:
        uniforms_drawn: number of uniform variates handed out so far.
        bits_drawn: total random bits consumed so far.
    """

    def __init__(self, seed: int | None = None) -> None:
        self.seed = seed
        if seed is None:
            self._rng: random.Random = secrets.SystemRandom()
        else:
            self._rng = random.Random(seed)
        self.uniforms_drawn = 0
        self.bits_drawn = 0

    @property
    def mode(self) -> str:
        """``"secure"`` for entropy-backed sources, else ``"seeded"``."""
        return "secure" if self.seed is None else "seeded"

    def getrandbits(self, k: int) -> int:
        """Return ``k`` uniform random bits as a non-negative integer.

        Raises:
            EntropyError: if the OS entropy source fails in secure mode.
        """
        try:
            return self._rng.getrandbits(k)
        except (NotImplementedError, OSError) as exc:  # pragma: no cover
            raise EntropyError("system entropy source unavailable") from exc


def next_uniform(src: BitSource, p: int = DEFAULT_PRECISION) -> UniformVariate:
    """Draw one uniform variate of precision ``p`` from ``src``.

    Consumes exactly ``p`` bits and updates the source's consumption
    counters, so callers can audit exactly how much randomness each
    sampler used.
    """
    check_precision(p)
    m = src.getrandbits(p)
    src.uniforms_drawn += 1
    src.bits_drawn += p
    return UniformVariate(m, p)


def round_to_multiple(x: float, k: float) -> float:
    """Round ``x`` to the nearest integer multiple of ``k``, ties to even.

    This is the grid-rounding operator used throughout the attack code;
    the ties-to-even rule matches the default IEEE-754 rounding mode so
    the attacker's rounding agrees with the arithmetic being attacked.

    Args:
        x: a finite real.
        k: a positive finite step.

    Raises:
        ValueError: for non-finite ``x``, non-positive or non-finite ``k``,
            or when ``x / k`` overflows.
    """
    if not math.isfinite(x):
        raise ValueError(f"cannot round non-finite value {x!r}")
    if not (math.isfinite(k) and k > 0):
        raise ValueError(f"step must be positive and finite, got {k!r}")
    q = x / k
    if not math.isfinite(q):
        raise ValueError(f"rounding {x!r} to multiples of {k!r} overflows")
    return round(q) * k


def round_to_variate(x: float, p: int) -> UniformVariate:
    """Round a real to the nearest precision-``p`` grid point, clamped to the grid.

    Values rounding below 0 clamp to ``m = 0``; values rounding to 1 or
    above clamp to the top grid point ``m = 2**p - 1``.  Clamping (rather
    than erroring) is what the attack's neighbourhood search wants: a CDF
    value within an ulp of 1.0 still identifies the top of the grid.
    """
    check_precision(p)
    if not math.isfinite(x):
        raise ValueError(f"cannot round non-finite value {x!r}")
    m = round(math.ldexp(x, p))
    top = (1 << p) - 1
    if m < 0:
        m = 0
    elif m > top:
        m = top
    return UniformVariate(m, p)


def neighbors(u: UniformVariate, w: int) -> list[UniformVariate]:
    """All grid points within ``w`` steps of ``u``, clamped to the grid edges.

    Returns an ascending list of distinct variates; at the boundary the
    window is truncated rather than wrapped.
    """
    if w < 0:
        raise ValueError(f"window must be non-negative, got {w}")
    top = (1 << u.p) - 1
    lo = max(0, u.m - w)
    hi = min(top, u.m + w)
    return [UniformVariate(m, u.p) for m in range(lo, hi + 1)]
