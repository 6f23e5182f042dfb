"""
Exact perfect-power detection on arbitrary-precision integers.

>>> integer_nth_root(10135681742311129, 2)
(100676123, True)
>>> perfect_power_decompose(64)
PowerWitness(base=2, exponent=6)
"""
import logging
import math
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

from sympy import primerange

from permscan.consts import Natural, SQUARE_MODULI
from permscan.exceptions import InvalidArgument, TrivialPower
from permscan.logging import VERBOSE

logger = logging.getLogger(__name__)


def _residues(modulus: int) -> frozenset:
    return frozenset(y * y % modulus for y in range(modulus))


SQUARE_RESIDUES = {modulus: _residues(modulus) for modulus in SQUARE_MODULI}


class PowerWitness(NamedTuple):
    base: Natural
    exponent: int

    @property
    def value(self) -> Natural:
        return self.base ** self.exponent

    def __str__(self):
        return f"{self.base}^{self.exponent}"


def integer_nth_root(x: Natural, k: int) -> Tuple[Natural, bool]:
    """
    Floor of the k-th root of ``x`` and whether it is exact.

    Newton iteration on integers, started above the root so that it decreases
    monotonically onto the floor.

    >>> integer_nth_root(27, 3), integer_nth_root(26, 3)
    ((3, True), (2, False))
    """
    if k < 1:
        raise InvalidArgument(f"root degree should be positive, got {k}.")
    if x < 0:
        raise InvalidArgument(f"expected a non-negative integer, got {x}.")
    if k == 1 or x < 2:
        return x, True
    if k == 2:
        root = math.isqrt(x)
        return root, root * root == x
    bits = x.bit_length()
    if k >= bits:
        # 2**k > x
        return 1, x == 1
    root = 1 << -(-bits // k)
    while True:
        step = ((k - 1) * root + x // root ** (k - 1)) // k
        if step >= root:
            break
        root = step
    power = root ** k
    assert power <= x < (root + 1) ** k, (x, k, root)
    return root, power == x


def is_perfect_square(x: Natural) -> Optional[Natural]:
    """
    Square root of ``x`` if it is a perfect square.

    Residues modulo 64 and 63 reject most non-squares before any root is taken.
    """
    if x < 0:
        raise InvalidArgument(f"expected a non-negative integer, got {x}.")
    for modulus, residues in SQUARE_RESIDUES.items():
        if x % modulus not in residues:
            return None
    root, exact = integer_nth_root(x, 2)
    return root if exact else None


@lru_cache(maxsize=64)
def _primes_below(bound: int) -> Tuple[int, ...]:
    return tuple(primerange(2, bound))


def prime_exponents(x: Natural) -> Tuple[int, ...]:
    """Primes ``p`` with ``2**p <= x``: the only exponents worth testing."""
    return _primes_below(x.bit_length())


def perfect_power_decompose(x: Natural) -> Optional[PowerWitness]:
    """
    Write ``x`` as ``base ** exponent`` with the largest possible exponent.

    :raise TrivialPower: for 0 and 1
    :return: witness or ``None`` if ``x`` is not a perfect power
    """
    if x in (0, 1):
        raise TrivialPower(f"{x} is a trivial power.")
    if x < 0:
        raise InvalidArgument(f"expected a non-negative integer, got {x}.")
    for p in prime_exponents(x):
        if p == 2:
            root = is_perfect_square(x)
        else:
            root, exact = integer_nth_root(x, p)
            root = root if exact else None
        if root is None:
            continue
        logger.log(VERBOSE, f"{x} = {root}^{p}")
        if root < 4:
            # 2 and 3 are not powers
            return PowerWitness(root, p)
        inner = perfect_power_decompose(root)
        if inner is None:
            return PowerWitness(root, p)
        return PowerWitness(inner.base, inner.exponent * p)
    return None
