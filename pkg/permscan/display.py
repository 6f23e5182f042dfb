"""
Rendering of command results.

``text`` is meant for people: aligned tables and colored verdicts. ``tabular``
is meant for scripts: tab separated, no padding, integers printed in full.

>>> Output('tabular', print_fn=print).table([(1, 13527684), (2, 34857216)])
1	13527684
2	34857216
"""
from typing import Callable, Iterable, Sequence, Tuple

from tabulate import tabulate

from permscan.exceptions import InvalidArgument
from permscan.utils import colors

FORMATS = ('text', 'tabular')


def render_table(rows: Iterable[Sequence], headers: Sequence[str] = (), fmt='text') -> str:
    rows = [[str(cell) for cell in row] for row in rows]
    if fmt == 'tabular':
        return tabulate(
            rows,
            headers=headers,
            tablefmt='tsv',
            disable_numparse=True,
            stralign=None,
            numalign=None,
        )
    tablefmt = 'simple' if headers else 'plain'
    # big integers must not pass through float
    return tabulate(rows, headers=headers, tablefmt=tablefmt, disable_numparse=True)


def render_pairs(pairs: Iterable[Tuple[str, object]], fmt='text') -> str:
    """
    >>> print(render_pairs([('perfect power', '2^6')]))
    perfect power: 2^6
    """
    sep = '\t' if fmt == 'tabular' else ': '
    return '\n'.join(f"{key}{sep}{value}" for key, value in pairs)


class Output:
    """Everything a command prints goes through here."""

    def __init__(self, fmt='text', print_fn: Callable[[str], None] = None):
        if fmt not in FORMATS:
            raise InvalidArgument(f"unknown output format {fmt!r}, expected one of {FORMATS}.")
        self.fmt = fmt
        self.print_fn = print_fn or print

    @property
    def is_text(self):
        return self.fmt == 'text'

    def line(self, text: str):
        self.print_fn(text)

    def lines(self, values: Iterable):
        for value in values:
            self.print_fn(str(value))

    def pairs(self, pairs: Iterable[Tuple[str, object]]):
        self.print_fn(render_pairs(pairs, self.fmt))

    def table(self, rows: Iterable[Sequence], headers: Sequence[str] = ()):
        rows = list(rows)
        if rows:
            self.print_fn(render_table(rows, headers, self.fmt))

    def verdict(self, ok: bool, text: str):
        """Final status line, green when ``ok``; plain in tabular mode."""
        if self.is_text:
            text = colors.green(text) if ok else colors.red(text)
        self.print_fn(text)
