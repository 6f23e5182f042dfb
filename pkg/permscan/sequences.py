"""
Blocks of concatenated permutations.

Block ``m`` is the set of distinct integers whose decimal string is a concatenation
of the tokens ``1, 2, ..., m`` in some order. Every member of a block has the same
digit length and the same digit multiset, so blocks for different ``m`` never mix.

>>> concat_range(12)
123456789101112
>>> cyclic_rotations(3)
[123, 231, 312]
>>> membership(12345671089).m
10
>>> membership(12345670189) is None
True
"""
import logging
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import count, islice, permutations
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from permscan.consts import Natural
from permscan.exceptions import InvalidArgument
from permscan.filters import theorem1_excludes
from permscan.logging import VERBOSE

logger = logging.getLogger(__name__)

DIGITS = '0123456789'


def _check_m(m: int):
    if m < 1:
        raise InvalidArgument(f"block index should be positive, got {m}.")


def _tokens(m: int) -> List[str]:
    return [str(i) for i in range(1, m + 1)]


@dataclass(frozen=True)
class TokenSeq:
    """Order of the tokens ``1..m``; witness of membership in block ``m``."""

    m: int
    order: Tuple[int, ...]

    def __post_init__(self):
        if len(self.order) != self.m or set(self.order) != set(range(1, self.m + 1)):
            raise InvalidArgument(f"order is not a permutation of 1..{self.m}.")

    def __str__(self):
        return ''.join(map(str, self.order))

    @property
    def value(self) -> Natural:
        return int(str(self))


@dataclass(frozen=True)
class DigitMultiset:
    counts: Tuple[int, ...]

    @classmethod
    def of(cls, x: Natural) -> 'DigitMultiset':
        s = str(x)
        return cls(tuple(s.count(d) for d in DIGITS))

    @property
    def length(self) -> int:
        return sum(self.counts)

    def __getitem__(self, digit: int) -> int:
        return self.counts[digit]


@lru_cache(maxsize=512)
def concat_range(m: int) -> Natural:
    """The m-th term of A007908: ``1``, ``2``, ..., ``m`` written one after another."""
    _check_m(m)
    return int(''.join(_tokens(m)))


def rotation(m: int, offset: int) -> Natural:
    """Token list ``1..m`` rotated left by ``offset`` positions and concatenated."""
    _check_m(m)
    if not 0 <= offset < m:
        raise InvalidArgument(f"rotation offset should be in 0..{m - 1}, got {offset}.")
    tokens = _tokens(m)
    return int(''.join(tokens[offset:] + tokens[:offset]))


def cyclic_rotations(m: int) -> List[Natural]:
    """All ``m`` rotations of block ``m``, ordered by rotation offset."""
    _check_m(m)
    tokens = _tokens(m)
    return [int(''.join(tokens[i:] + tokens[:i])) for i in range(m)]


def sorted_rotations(m: int) -> List[Natural]:
    """Block ``m`` of A001292, ascending."""
    return sorted(cyclic_rotations(m))


def block_digit_length(m: int) -> int:
    _check_m(m)
    total, width, low = 0, 1, 1
    while low <= m:
        high = min(m, low * 10 - 1)
        total += (high - low + 1) * width
        low *= 10
        width += 1
    return total


def block_for_length(length: int) -> Optional[int]:
    """
    The only ``m`` whose members have ``length`` digits, if any.

    >>> block_for_length(11), block_for_length(10)
    (10, None)
    """
    if length < 1:
        return None
    total, width, low = 0, 1, 1
    while True:
        span = 9 * low * width  # digits used by all tokens of this width
        if total + span >= length:
            rest = length - total
            if rest % width:
                return None
            return low - 1 + rest // width
        total += span
        low *= 10
        width += 1


@lru_cache(maxsize=512)
def block_multiset(m: int) -> DigitMultiset:
    return DigitMultiset.of(concat_range(m))


def digit_multiset(x: Natural) -> DigitMultiset:
    if x < 0:
        raise InvalidArgument(f"expected a non-negative integer, got {x}.")
    return DigitMultiset.of(x)


def _concat_order(a: str, b: str) -> int:
    ab, ba = a + b, b + a
    return (ab > ba) - (ab < ba)


def minimal_arrangement(m: int) -> Natural:
    """
    Smallest member of block ``m``.

    >>> minimal_arrangement(22)
    10111121314151617181920212223456789
    """
    _check_m(m)
    return int(''.join(sorted(_tokens(m), key=cmp_to_key(_concat_order))))


# One way of reading a prefix: tokens not yet placed, token being written and how
# many of its characters are already written ('' and 0 at a token boundary).
_Reading = Tuple[FrozenSet[str], str, int]


def _after(remaining: FrozenSet[str], token: str, pos: int) -> _Reading:
    if pos == len(token):
        return remaining, '', 0
    return remaining, token, pos


def _successors(readings: FrozenSet[_Reading]) -> List[Tuple[str, FrozenSet[_Reading]]]:
    by_digit: Dict[str, set] = {}
    for remaining, token, pos in readings:
        if token:
            by_digit.setdefault(token[pos], set()).add(_after(remaining, token, pos + 1))
            continue
        for t in remaining:
            by_digit.setdefault(t[0], set()).add(_after(remaining - {t}, t, 1))
    return [(digit, frozenset(by_digit[digit])) for digit in sorted(by_digit)]


def _walk_block(m: int) -> Iterator[Natural]:
    # depth-first over digits, smallest digit first; all members share one length,
    # so this visits every distinct member once and in ascending order
    length = block_digit_length(m)
    start = frozenset({(frozenset(_tokens(m)), '', 0)})
    digits: List[str] = []
    stack = [iter(_successors(start))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if digits:
                digits.pop()
            continue
        digit, readings = step
        digits.append(digit)
        if len(digits) == length:
            yield int(''.join(digits))
            digits.pop()
            continue
        stack.append(iter(_successors(readings)))


def enumerate_block(m: int, limit: int = None) -> Iterator[Natural]:
    """
    Members of block ``m`` in strictly ascending order, without duplicates.

    :param m: block index
    :param limit: stop after this many values, ``None`` for the whole block
    """
    _check_m(m)
    if limit is not None and limit < 1:
        raise InvalidArgument(f"limit should be positive, got {limit}.")
    if m <= 9:
        # single digit tokens: lexicographic permutations are already sorted and distinct
        stream = (int(''.join(p)) for p in permutations(''.join(_tokens(m))))
    else:
        stream = _walk_block(m)
    logger.log(VERBOSE, f"enumerating block {m}, limit {limit}")
    return islice(stream, limit)


def _forced_tokens(s: str, width: int, m: int) -> Optional[Dict[int, int]]:
    # a zero never starts a token; when only one occurrence of a token can cover
    # it, that token is pinned to that start. None when no split is possible.
    forced: Dict[int, int] = {}
    for i, digit in enumerate(s):
        if digit != '0':
            continue
        covers = {
            (p, int(s[p : p + w]))
            for p in range(max(0, i - width + 1), i)
            for w in range(i - p + 1, min(width, len(s) - p) + 1)
            if s[p] != '0' and int(s[p : p + w]) <= m
        }
        if not covers:
            return None
        if len(covers) == 1:
            ((start, value),) = covers
            if forced.setdefault(value, start) != start:
                return None
    return forced


def _choices(s: str, pos: int, width: int, m: int, used: int, forced: Dict[int, int]):
    if s[pos] == '0':
        return
    # longest token first
    for w in range(min(width, len(s) - pos), 0, -1):
        value = int(s[pos : pos + w])
        if value <= m and not used >> value & 1 and forced.get(value, pos) == pos:
            yield value, pos + w


def _tokenize(s: str, m: int) -> Optional[List[int]]:
    width = len(str(m))
    forced = _forced_tokens(s, width, m)
    if forced is None:
        return None
    # (position, used tokens) pairs known to lead nowhere
    dead: Set[Tuple[int, int]] = set()
    order: List[int] = []
    ends = [0]
    used = 0
    stack = [_choices(s, 0, width, m, used, forced)]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            dead.add((ends.pop(), used))
            if order:
                used ^= 1 << order.pop()
            continue
        value, end = step
        if (end, used | 1 << value) in dead:
            continue
        used |= 1 << value
        order.append(value)
        ends.append(end)
        if end == len(s):
            return order
        stack.append(_choices(s, end, width, m, used, forced))
    return None


def membership(x: Natural) -> Optional[TokenSeq]:
    """
    Split ``x`` into the tokens ``1..m``.

    :return: a witness order (its ``m`` names the block) or ``None`` if ``x`` is not
        a member of A352991
    """
    if x < 1:
        raise InvalidArgument(f"membership is defined for positive integers, got {x}.")
    s = str(x)
    m = block_for_length(len(s))
    if m is None or DigitMultiset.of(x) != block_multiset(m):
        return None
    order = _tokenize(s, m)
    if order is None:
        logger.debug(f"{x} has the digits of block {m} but does not split into its tokens")
        return None
    return TokenSeq(m, tuple(order))


def is_candidate_block(m: int) -> bool:
    """Block ``m`` survives the mod 9 sieve (block 1 is kept as A353025 keeps 1)."""
    _check_m(m)
    return m == 1 or not theorem1_excludes(m)


def is_candidate(x: Natural) -> bool:
    """Membership in A353025."""
    witness = membership(x)
    return witness is not None and is_candidate_block(witness.m)


def block_terms(name: str, m: int, limit: int = None) -> Iterator[Natural]:
    """Terms of sequence ``name`` that belong to block ``m``, ascending."""
    _check_m(m)
    if name == 'a007908':
        terms = iter([concat_range(m)])
    elif name == 'a001292':
        terms = iter(sorted_rotations(m))
    elif name == 'a352991':
        terms = enumerate_block(m)
    elif name == 'a353025':
        terms = enumerate_block(m) if is_candidate_block(m) else iter(())
    else:
        raise InvalidArgument(f"unknown sequence {name!r}, expected one of {SEQUENCES}.")
    if limit is not None and limit < 1:
        raise InvalidArgument(f"limit should be positive, got {limit}.")
    return islice(terms, limit)


def _all_blocks(name: str) -> Iterator[Natural]:
    for m in count(1):
        yield from block_terms(name, m)


def terms(name: str) -> Iterator[Natural]:
    """Whole sequence ``name`` in OEIS order, produced block by block."""
    if name not in SEQUENCES:
        raise InvalidArgument(f"unknown sequence {name!r}, expected one of {SEQUENCES}.")
    return _all_blocks(name)


SEQUENCES = ('a007908', 'a001292', 'a352991', 'a353025')
