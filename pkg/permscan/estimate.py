"""
Side computations: trailing digits of the rotation terms and the probabilistic
bound on the number of perfect powers among them.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from permscan.consts import BOUND_J_START, DEFAULT_J_MAX, DEFAULT_K_MAX
from permscan.exceptions import InvalidArgument
from permscan.logging import VERBOSE

logger = logging.getLogger(__name__)


def trailing_digit_law(c: int) -> Fraction:
    """
    Probability that a rotation term ends in ``c``.

    >>> trailing_digit_law(7), trailing_digit_law(0)
    (Fraction(4, 55), Fraction(1, 55))
    """
    if not 0 <= c <= 9:
        raise InvalidArgument(f"expected a decimal digit, got {c}.")
    if c == 0:
        return Fraction(1, 55)
    return Fraction(11 - c, 55)


@dataclass(frozen=True)
class TailDistribution:
    counts: Tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.counts) != 10 or sum(self.counts) != self.total:
            raise InvalidArgument(f"counts {self.counts} do not add up to {self.total}.")

    def frequencies(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.total) for c in self.counts)

    def deviations(self) -> Tuple[Fraction, ...]:
        return tuple(abs(f - trailing_digit_law(c)) for c, f in enumerate(self.frequencies()))

    def max_deviation(self) -> Fraction:
        return max(self.deviations())


def trailing_digit_empirical(m_max: int) -> TailDistribution:
    """
    Tally the last digit of every rotation term of blocks ``1..m_max``.

    Rotating ``1..m`` left by ``i`` leaves token ``i`` last (token ``m`` for
    ``i = 0``), so block ``m`` ends once in the last digit of each of its tokens.

    >>> trailing_digit_empirical(10).counts
    (1, 10, 9, 8, 7, 6, 5, 4, 3, 2)
    """
    if m_max < 2:
        raise InvalidArgument(f"m_max should be at least 2, got {m_max}.")
    counts = [0] * 10
    # last digits of tokens 1..m
    seen = [0] * 10
    for m in range(1, m_max + 1):
        seen[m % 10] += 1
        for digit, n in enumerate(seen):
            counts[digit] += n
    return TailDistribution(tuple(counts), sum(counts))


def _log10_add(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = max(a, b), min(a, b)
    return hi + math.log10(1 + 10 ** (lo - hi))


def _log10_sum(values: Iterable[float]) -> float:
    # pairwise to keep rounding balanced
    values = list(values)
    if not values:
        return -math.inf
    while len(values) > 1:
        paired = [_log10_add(a, b) for a, b in zip(values[::2], values[1::2])]
        if len(values) % 2:
            paired.append(values[-1])
        values = paired
    return values[0]


def bound_term_log10(j: int, k: int) -> float:
    """
    ``log10`` of ``4j (10**(4j/k) - 10**((4j-1)/k)) / (9 * 10**(4j-1))``.

    >>> round(bound_term_log10(309, 2), 2)
    -615.03
    """
    if j < 1 or k < 2:
        raise InvalidArgument(f"need j >= 1 and k >= 2, got {j}, {k}.")
    digits = 4 * j
    return (
        math.log10(digits / 9)
        + digits / k
        + math.log10(-math.expm1(-math.log(10) / k))
        - (digits - 1)
    )


@dataclass(frozen=True)
class BoundEstimate:
    j_max: int
    k_max: int
    log10_value: float
    log10_square_band: float
    # log10 of an upper bound on the terms with j > j_max, for k <= k_max
    log10_tail: float

    @property
    def square_share(self) -> float:
        """Fraction of the truncated sum carried by k = 2."""
        return 10 ** (self.log10_square_band - self.log10_value)


def _band_log10(k: int, j_max: int) -> float:
    terms = (bound_term_log10(j, k) for j in range(BOUND_J_START, j_max + 1))
    return math.log10(2) + _log10_sum(terms)


def _tail_log10(k: int, j_max: int) -> float:
    # consecutive terms shrink at least by this ratio once j > j_max
    j = j_max + 1
    ratio_log10 = math.log10((j + 1) / j) + 4 / k - 4
    return math.log10(2) + bound_term_log10(j, k) - math.log10(1 - 10 ** ratio_log10)


def kashihara_bound(j_max: int = DEFAULT_J_MAX, k_max: int = DEFAULT_K_MAX) -> BoundEstimate:
    """
    Expected number of perfect powers among the rotation terms, truncated at
    ``j_max`` and ``k_max`` and evaluated entirely in ``log10``.
    """
    if j_max < BOUND_J_START:
        raise InvalidArgument(f"j_max should be at least {BOUND_J_START}, got {j_max}.")
    if k_max < 2:
        raise InvalidArgument(f"k_max should be at least 2, got {k_max}.")
    bands: Dict[int, float] = {k: _band_log10(k, j_max) for k in range(2, k_max + 1)}
    for k, band in bands.items():
        logger.log(VERBOSE, f"k={k}: log10 band = {band:.3f}")
    value = _log10_sum(bands.values())
    tail = _log10_sum(_tail_log10(k, j_max) for k in bands)
    return BoundEstimate(j_max, k_max, value, bands[2], tail)


def kashihara_bound_log10(j_max: int = DEFAULT_J_MAX, k_max: int = DEFAULT_K_MAX) -> float:
    return kashihara_bound(j_max, k_max).log10_value
