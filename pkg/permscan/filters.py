"""
Congruence sieves that rule out perfect powers without computing any root.

Every member of block ``m`` has the digit sum of ``1 + 2 + ... + m``, so its class
modulo 9 is the triangular residue of ``m``. A perfect power divisible by 3 is
divisible by 9, hence blocks whose residue is 3 or 6 hold no perfect power.

>>> [m for m in range(2, 20) if theorem1_excludes(m)]
[2, 3, 5, 6, 11, 12, 14, 15]
>>> candidate_filter(231, 3).reason.value
'mod9-theorem1'
"""
import enum
import logging
from dataclasses import dataclass

from permscan.consts import (
    CANDIDATE_RESIDUES,
    EXCLUDED_MOD9,
    FIVE_TAILS,
    Natural,
    SINGLE_THREE_RESIDUES,
)
from permscan.exceptions import InvalidArgument

logger = logging.getLogger(__name__)

# (m * (m + 1) / 2) mod 9 has period 9 in m
_TRIANGULAR = tuple(r * (r + 1) // 2 % 9 for r in range(9))


class Reason(enum.Enum):
    MOD9_THEOREM1 = 'mod9-theorem1'
    TRAILING_MOD100 = 'trailing-mod100'
    NONE = 'none'


@dataclass(frozen=True)
class FilterVerdict:
    excluded: bool
    reason: Reason = Reason.NONE

    def __post_init__(self):
        if self.excluded == (self.reason is Reason.NONE):
            raise InvalidArgument(f"inconsistent verdict: excluded={self.excluded}, {self.reason}")

    def __str__(self):
        if self.excluded:
            return f"excluded ({self.reason.value})"
        return 'candidate'


CANDIDATE = FilterVerdict(False)


def triangular_residue(m: int) -> int:
    """Digit-sum class of every member of block ``m``: ``m(m+1)/2 mod 9``."""
    if m < 1:
        raise InvalidArgument(f"block index should be positive, got {m}.")
    return _TRIANGULAR[m % 9]


def theorem1_excludes(m: int) -> bool:
    if m < 2:
        raise InvalidArgument(f"the mod 9 sieve needs m > 1, got {m}.")
    excluded = m % 9 in EXCLUDED_MOD9
    residue = triangular_residue(m)
    assert excluded == (residue in SINGLE_THREE_RESIDUES), (m, residue)
    assert excluded or residue in CANDIDATE_RESIDUES, (m, residue)
    return excluded


def block_residue_matches(concatenation: Natural) -> bool:
    """
    The big-integer form of the sieve: the block survives iff its concatenation
    is not congruent to 3 or 6 modulo 9.
    """
    return concatenation % 9 not in SINGLE_THREE_RESIDUES


def residue_mod9(x: Natural) -> int:
    return x % 9


def digital_root(x: Natural) -> int:
    """
    Iterated digit sum; 9 for positive multiples of 9 and 0 only for 0.

    >>> digital_root(123), digital_root(18), digital_root(0)
    (6, 9, 0)
    """
    if x < 0:
        raise InvalidArgument(f"expected a non-negative integer, got {x}.")
    if x == 0:
        return 0
    return 1 + (x - 1) % 9


def remark1_passes(x: Natural) -> bool:
    """
    Trailing-digit conditions every perfect power meets: a power divisible by 5
    ends in 00, 25 or 75, a power ending in 6 has an odd tens digit.

    >>> remark1_passes(25), remark1_passes(30), remark1_passes(36), remark1_passes(46)
    (True, False, True, False)
    """
    if x < 10:
        raise InvalidArgument(f"two digits are needed for the trailing test, got {x}.")
    last = x % 10
    if last in (0, 5):
        return x % 100 in FIVE_TAILS
    if last == 6:
        return (x // 10) % 2 == 1
    return True


def candidate_filter(x: Natural, m: int) -> FilterVerdict:
    """
    Combined sieve for a member ``x`` of block ``m``.

    Block membership is not re-checked.
    """
    if m == 1:
        # the single term 1 is a trivial power, nothing to sieve
        return CANDIDATE
    if theorem1_excludes(m):
        return FilterVerdict(True, Reason.MOD9_THEOREM1)
    if not remark1_passes(x):
        logger.debug(f"{x} fails the trailing digits test")
        return FilterVerdict(True, Reason.TRAILING_MOD100)
    return CANDIDATE
