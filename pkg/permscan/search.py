"""
Brute-force searches for perfect powers in the concatenated-permutation blocks.

Two scans are provided:

* :func:`kashihara_scan` tests every cyclic rotation of each surviving block with
  a full perfect-power decomposition;
* :func:`conjecture1_scan` walks the *bases* ``x`` whose powers ``x**k`` have the
  block's digit length and keeps those whose power splits into the block's tokens.

Both can be resumed from a :class:`~permscan.checkpoint.SearchCheckpoint` and can
spread work over worker processes; hits are merged in a fixed order so results
do not depend on the number of workers.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import repeat
from typing import Callable, List, Optional, Tuple

from sympy import primerange

from permscan.checkpoint import Hit, ScanKind, SearchCheckpoint
from permscan.consts import DEFAULT_BUDGET, DEFAULT_CHUNK
from permscan.exceptions import BudgetExceeded, CheckpointError, InvalidArgument
from permscan.filters import (
    block_residue_matches,
    remark1_passes,
    theorem1_excludes,
    triangular_residue,
)
from permscan.logging import VERBOSE
from permscan.powercheck import integer_nth_root, perfect_power_decompose
from permscan.sequences import block_digit_length, concat_range, membership, rotation

logger = logging.getLogger(__name__)

CheckpointCallback = Callable[[SearchCheckpoint], None]


@dataclass
class ScanReport:
    kind: ScanKind
    blocks_checked: range
    candidates_tested: int = 0
    filtered_by_mod9: int = 0
    filtered_by_trailing: int = 0
    hits: List[Hit] = field(default_factory=list)
    # hits that break the conjecture under test
    counterexamples: List[Hit] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def root_range(length: int, k: int) -> range:
    """
    Bases ``x`` with ``10**(length - 1) <= x**k < 10**length``.

    >>> root_range(8, 2)
    range(3163, 10000)
    """
    if length < 1 or k < 1:
        raise InvalidArgument(f"need length >= 1 and k >= 1, got {length}, {k}.")
    low_bound, high_bound = 10 ** (length - 1), 10 ** length
    low, exact = integer_nth_root(low_bound, k)
    if not exact:
        low += 1
    high, _ = integer_nth_root(high_bound - 1, k)
    assert (low - 1) ** k < low_bound <= low ** k, (length, k, low)
    assert high ** k < high_bound <= (high + 1) ** k, (length, k, high)
    return range(low, high + 1)


def block_root_range(m: int, k: int) -> range:
    return root_range(block_digit_length(m), k)


def partition(bases: range, parts: int) -> List[range]:
    """
    Split ``bases`` into at most ``parts`` contiguous ranges of nearly equal size.

    >>> partition(range(10, 20), 3)
    [range(10, 14), range(14, 17), range(17, 20)]
    """
    parts = max(1, min(parts, len(bases)))
    size, extra = divmod(len(bases), parts)
    res = []
    start = bases.start
    for i in range(parts):
        stop = start + size + (i < extra)
        res.append(range(start, stop))
        start = stop
    return res


def scan_bases(m: int, k: int, bases: range) -> List[Hit]:
    """
    Powers ``x**k`` for ``x`` in ``bases`` that are members of block ``m``.

    ``bases`` may be any contiguous part of the block's root range; this is the
    unit of work handed to worker processes.
    """
    target = sorted(str(concat_range(m)))
    residue = triangular_residue(m)
    # equal digit multisets imply equal digit sums, so x**k must share the block's class
    allowed = frozenset(r for r in range(9) if pow(r, k, 9) == residue)
    hits = []
    for x in bases:
        if x % 9 not in allowed:
            continue
        y = x ** k
        if sorted(str(y)) != target:
            continue
        if membership(y) is None:
            logger.debug(f"{x}^{k} = {y} has the digits of block {m} but not its tokens")
            continue
        logger.log(VERBOSE, f"hit {y} = {x}^{k}")
        hits.append(Hit(y, x, k))
    return hits


def scan_rotations(m: int, offsets: range) -> Tuple[List[Hit], int]:
    """Decompose the rotations of block ``m`` at ``offsets``; also count trailing-test rejects."""
    hits = []
    rejected = 0
    for offset in offsets:
        value = rotation(m, offset)
        if not remark1_passes(value):
            rejected += 1
            continue
        witness = perfect_power_decompose(value)
        if witness is not None:
            logger.warning(f"block {m}, rotation {offset}: {value} = {witness}")
            hits.append(Hit(value, witness.base, witness.exponent))
    return hits, rejected


@contextmanager
def _executor(workers: int):
    if workers <= 1:
        yield None
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield pool


def _map(pool: Optional[ProcessPoolExecutor], fn, *iterables) -> list:
    if pool is None:
        return list(map(fn, *iterables))
    return list(pool.map(fn, *iterables))


def _check_workers(workers: int):
    if workers < 1:
        raise InvalidArgument(f"workers should be at least 1, got {workers}.")


def power_scan_block(m: int, k: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> List[Hit]:
    """
    All members of block ``m`` that are ``k``-th powers, found through their bases.

    :param m: block index, must survive the mod 9 sieve
    :param k: exponent
    :param budget: largest root range scanned without partitioning by the caller
    :param workers: number of processes sharing the root range
    :raise BudgetExceeded: root range is larger than ``budget``
    """
    if m < 2 or theorem1_excludes(m):
        raise InvalidArgument(f"block {m} is excluded by the mod 9 sieve.")
    if k < 2:
        raise InvalidArgument(f"exponent should be at least 2, got {k}.")
    _check_workers(workers)
    bases = block_root_range(m, k)
    if len(bases) > budget:
        raise BudgetExceeded(m, k, len(bases), budget)
    pieces = partition(bases, workers)
    with _executor(workers) as pool:
        found = _map(pool, scan_bases, repeat(m), repeat(k), pieces)
    return sorted(hit for part in found for hit in part)


def _check_resume(resume: Optional[SearchCheckpoint], kind: ScanKind):
    if resume is not None and resume.kind is not kind:
        raise CheckpointError(
            f"checkpoint belongs to a {resume.kind.value} scan, not {kind.value}."
        )


def _power_counterexamples(hits: List[Hit]) -> List[Hit]:
    res = []
    for hit in hits:
        witness = perfect_power_decompose(hit.value)
        if hit.exponent != 2 or witness.exponent != 2:
            res.append(hit)
    return res


def conjecture1_scan(
    m_max: int,
    k_max: int,
    resume: SearchCheckpoint = None,
    *,
    k_min: int = 2,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    on_checkpoint: CheckpointCallback = None,
) -> ScanReport:
    """
    Perfect powers in blocks ``2..m_max`` for prime exponents ``k_min..k_max``.

    A power with a composite exponent is also a power with each prime divisor of
    that exponent, so prime exponents find every hit; each hit is then decomposed
    to its largest exponent. The conjecture holds on the range when every hit is a
    square and none of them is a higher power.

    :param resume: checkpoint of an interrupted run with the same arguments
    :param k_min: smallest exponent, 3 looks for cubes and higher powers only
    :param chunk_size: bases scanned between two checkpoints
    :param on_checkpoint: called with a fresh checkpoint after every chunk
    """
    if m_max < 2:
        raise InvalidArgument(f"m_max should be at least 2, got {m_max}.")
    if not 2 <= k_min <= k_max:
        raise InvalidArgument(f"need 2 <= k_min <= k_max, got {k_min}, {k_max}.")
    if chunk_size < 1:
        raise InvalidArgument(f"chunk size should be positive, got {chunk_size}.")
    _check_workers(workers)
    _check_resume(resume, ScanKind.POWER_BLOCK)
    started = time.perf_counter()
    exponents = list(primerange(k_min, k_max + 1))
    if not exponents:
        raise InvalidArgument(f"no prime exponent in {k_min}..{k_max}.")
    blocks = range(2, m_max + 1)
    report = ScanReport(ScanKind.POWER_BLOCK, blocks)

    cells = []
    for m in blocks:
        if theorem1_excludes(m):
            report.filtered_by_mod9 += 1
            continue
        for k in exponents:
            bases = block_root_range(m, k)
            if len(bases) > budget:
                raise BudgetExceeded(m, k, len(bases), budget)
            cells.append((m, k, bases))

    hits = list(resume.hits) if resume else []
    with _executor(workers) as pool:
        for m, k, bases in cells:
            start = bases.start
            if resume is not None:
                if (m, k) < (resume.m, resume.exponent):
                    continue
                if (m, k) == (resume.m, resume.exponent):
                    start = max(start, resume.next_root)
            for chunk_start in range(start, bases.stop, chunk_size):
                chunk = range(chunk_start, min(chunk_start + chunk_size, bases.stop))
                found = _map(pool, scan_bases, repeat(m), repeat(k), partition(chunk, workers))
                hits.extend(hit for part in found for hit in part)
                report.candidates_tested += len(chunk)
                logger.log(VERBOSE, f"m={m}, k={k}: bases up to {chunk.stop} done")
                if on_checkpoint is not None:
                    on_checkpoint(
                        SearchCheckpoint(
                            ScanKind.POWER_BLOCK, m, k, next_root=chunk.stop, hits=sorted(hits)
                        )
                    )
            if k == exponents[-1]:
                logger.info(f"1..{m} checked.")

    report.hits = sorted(hits)
    report.counterexamples = _power_counterexamples(report.hits)
    report.elapsed = time.perf_counter() - started
    return report


def kashihara_scan(
    m_max: int,
    resume: SearchCheckpoint = None,
    *,
    workers: int = 1,
    on_checkpoint: CheckpointCallback = None,
) -> ScanReport:
    """
    Look for perfect powers among the cyclic rotations of blocks ``2..m_max``.

    Any hit is a counterexample.

    :param resume: checkpoint of an interrupted run
    :param on_checkpoint: called with a fresh checkpoint after every block
    """
    if m_max < 2:
        raise InvalidArgument(f"m_max should be at least 2, got {m_max}.")
    _check_workers(workers)
    _check_resume(resume, ScanKind.KASHIHARA)
    started = time.perf_counter()
    blocks = range(2, m_max + 1)
    report = ScanReport(ScanKind.KASHIHARA, blocks)
    hits = list(resume.hits) if resume else []

    with _executor(workers) as pool:
        for m in blocks:
            excluded = theorem1_excludes(m)
            # the residue of the whole concatenation must skip exactly the same blocks
            assert block_residue_matches(concat_range(m)) != excluded, m
            if excluded:
                report.filtered_by_mod9 += 1
                logger.debug(f"block {m} skipped, m = {m % 9} (mod 9)")
                continue
            if resume is not None and m < resume.m:
                continue
            first = resume.next_rotation if resume is not None and m == resume.m else 0
            offsets = range(min(first, m), m)
            found = _map(pool, scan_rotations, repeat(m), partition(offsets, workers))
            for part_hits, rejected in found:
                hits.extend(part_hits)
                report.filtered_by_trailing += rejected
            report.candidates_tested += len(offsets)
            logger.info(f"1..{m} checked.")
            if on_checkpoint is not None:
                on_checkpoint(
                    SearchCheckpoint(ScanKind.KASHIHARA, m + 1, next_rotation=0, hits=sorted(hits))
                )

    report.hits = sorted(hits)
    report.counterexamples = list(report.hits)
    report.elapsed = time.perf_counter() - started
    return report
