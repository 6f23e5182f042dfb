"""
Help output: every option's help ends with its type, default and environment variable.

>>> describe_default(10 ** 8), describe_default(10), describe_default('a352991')
('100_000_000', '10', "'a352991'")
"""
import argparse
import copy
from argparse import Action
from typing import Optional

from permscan.fields import Opt
from permscan.utils import colored


def describe_default(value) -> str:
    # same spelling the integer options accept
    if isinstance(value, int) and value >= 10 ** 4:
        return f"{value:_}"
    return repr(value)


class HelpFormatter(argparse.HelpFormatter):
    header_color = None
    invoc_color = None
    note_color = None

    def __init__(self, prog, indent_increment=4, max_help_position=32, width=120):
        super().__init__(prog, indent_increment, max_help_position, width)

    def start_section(self, heading):
        return super().start_section(colored(heading, self.header_color))

    def add_usage(self, usage, actions, groups, prefix=None):
        if prefix is None:
            prefix = colored('usage', self.header_color) + ': '
        return super().add_usage(usage, actions, groups, prefix)

    def notes(self, action: Action) -> Optional[str]:
        meta: Opt = getattr(action, '__meta', None)
        if meta is None or action.nargs in (0, argparse.PARSER):
            return None
        res = [getattr(meta.type, '__name__', str(meta.type))]
        if action.option_strings and action.default is not None:
            res.append(f"default: {describe_default(action.default)}")
        if meta.env:
            res.append(f"env: {meta.env}")
        return colored(', '.join(res), self.note_color)

    def _format_action(self, action):
        notes = self.notes(action)
        if notes and action.help != argparse.SUPPRESS:
            # the parser keeps its actions, help may be formatted more than once
            action = copy.copy(action)
            action.help = f"{notes}. {action.help}" if action.help else notes
        text = super()._format_action(action)
        width = len(self._format_action_invocation(action)) + self._current_indent
        return colored(text[:width], self.invoc_color) + text[width:]


class ColoredHelpFormatter(HelpFormatter):
    header_color = 'yellow'
    invoc_color = 'green'
    note_color = 'red'
