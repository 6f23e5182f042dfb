"""
OEIS b-files: plain text, one ``<index> <value>`` pair per line, ``#`` comments.
"""
import logging
from itertools import islice
from typing import Iterator, NamedTuple, Optional, Tuple

from permscan.checkpoint import PathLike
from permscan.consts import Natural
from permscan.exceptions import BFileError, InvalidArgument
from permscan.sequences import terms

logger = logging.getLogger(__name__)


class Mismatch(NamedTuple):
    index: int
    expected: Optional[Natural]
    generated: Natural

    def __str__(self):
        expected = '-' if self.expected is None else self.expected
        return f"mismatch at index {self.index}: b-file {expected}, generated {self.generated}"


def read_bfile(path: PathLike) -> Iterator[Tuple[int, Natural]]:
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise BFileError(f"expected '<index> <value>', got {line!r}", lineno)
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileError(f"non-integer field in {line!r}", lineno)
            yield index, value


def compare_bfile(name: str, path: PathLike, count: int) -> Optional[Mismatch]:
    """
    Compare the first ``count`` generated terms of ``name`` with a b-file.

    :return: first mismatch or ``None`` when the prefixes agree; a b-file shorter
        than ``count`` is a mismatch at its first missing index
    """
    if count < 1:
        raise InvalidArgument(f"count should be positive, got {count}.")
    expected = read_bfile(path)
    first_index = None
    for position, generated in enumerate(islice(terms(name), count)):
        row = next(expected, None)
        if row is None:
            index = (1 if first_index is None else first_index) + position
            return Mismatch(index, None, generated)
        index, value = row
        if first_index is None:
            first_index = index
        if index != first_index + position or value != generated:
            logger.debug(f"{name}: first difference at b-file line for index {index}")
            return Mismatch(index, value, generated)
    logger.info(f"{name}: first {count} terms agree with {path}")
    return None
