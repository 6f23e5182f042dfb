"""
Resumable scan progress stored as line-oriented text.

::

    permscan-checkpoint v1
    kind=power-block
    m=9
    exponent=2
    next_root=20000
    hit=139854276,11826,2
"""
import enum
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, NamedTuple, Union

from permscan.consts import CHECKPOINT_HEADER, Natural
from permscan.exceptions import CheckpointError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class ScanKind(enum.Enum):
    KASHIHARA = 'kashihara'
    POWER_BLOCK = 'power-block'


class Hit(NamedTuple):
    value: Natural
    base: Natural
    exponent: int

    def __str__(self):
        return f"{self.value} = {self.base}^{self.exponent}"


@dataclass
class SearchCheckpoint:
    """
    Where a scan stopped: the next unit of work and the hits found before it.

    ``exponent`` and ``next_root`` belong to power scans, ``next_rotation`` to
    the rotation scan.
    """

    kind: ScanKind
    m: int
    exponent: int = None
    next_root: Natural = None
    next_rotation: int = None
    hits: List[Hit] = field(default_factory=list)

    def __post_init__(self):
        if self.kind is ScanKind.POWER_BLOCK:
            if self.exponent is None or self.exponent < 2 or self.next_root is None:
                raise CheckpointError("power-block checkpoint needs exponent >= 2 and next_root")
        elif self.next_rotation is None:
            raise CheckpointError("kashihara checkpoint needs next_rotation")

    def lines(self) -> List[str]:
        res = [CHECKPOINT_HEADER, f'kind={self.kind.value}', f'm={self.m}']
        if self.kind is ScanKind.POWER_BLOCK:
            res += [f'exponent={self.exponent}', f'next_root={self.next_root}']
        else:
            res += [f'next_rotation={self.next_rotation}']
        res += [f'hit={h.value},{h.base},{h.exponent}' for h in self.hits]
        return res


def checkpoint_save(cp: SearchCheckpoint, path: PathLike):
    """Write ``cp`` next to ``path`` and move it into place in one step."""
    path = Path(path)
    text = ''.join(f'{line}\n' for line in cp.lines())
    fd, tmp = tempfile.mkstemp(prefix=f'.{path.name}.', dir=str(path.parent or '.'))
    try:
        with os.fdopen(fd, 'w') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, str(path))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.debug(f"checkpoint saved to {path}: m={cp.m}, {len(cp.hits)} hits")


def _parse_int(value: str, key: str, lineno: int) -> int:
    try:
        res = int(value, 10)
    except ValueError:
        raise CheckpointError(f"{key} should be a decimal integer, got {value!r}", lineno)
    if res < 0:
        raise CheckpointError(f"{key} should not be negative", lineno)
    return res


def _parse_hit(value: str, lineno: int) -> Hit:
    parts = value.split(',')
    if len(parts) != 3:
        raise CheckpointError(f"hit should be <value>,<base>,<exponent>, got {value!r}", lineno)
    hit = Hit(*(_parse_int(p, 'hit', lineno) for p in parts))
    if hit.base ** hit.exponent != hit.value:
        raise CheckpointError(f"hit {value!r} does not reconstruct", lineno)
    return hit


_FIELDS = ('kind', 'm', 'exponent', 'next_root', 'next_rotation')


def checkpoint_load(path: PathLike) -> SearchCheckpoint:
    with open(path) as f:
        text = f.read()
    if not text.endswith('\n'):
        # truncated
        raise CheckpointError("file is not newline-terminated", text.count('\n') + 1)
    lines = text.splitlines()
    if not lines or lines[0] != CHECKPOINT_HEADER:
        raise CheckpointError(f"expected header {CHECKPOINT_HEADER!r}", 1)
    values = {}
    hits = []
    for lineno, line in enumerate(lines[1:], start=2):
        key, sep, value = line.partition('=')
        if not sep:
            raise CheckpointError(f"expected key=value, got {line!r}", lineno)
        if key == 'hit':
            hits.append(_parse_hit(value, lineno))
        elif key not in _FIELDS:
            raise CheckpointError(f"unknown key {key!r}", lineno)
        elif key in values:
            raise CheckpointError(f"duplicate key {key!r}", lineno)
        elif key == 'kind':
            try:
                values[key] = ScanKind(value)
            except ValueError:
                raise CheckpointError(f"unknown scan kind {value!r}", lineno)
        else:
            values[key] = _parse_int(value, key, lineno)
    if 'kind' not in values or 'm' not in values:
        raise CheckpointError("kind and m are required", len(lines) + 1)
    try:
        return SearchCheckpoint(hits=hits, **values)
    except CheckpointError as e:
        raise CheckpointError(str(e), len(lines) + 1)
