from argparse import ArgumentTypeError
from functools import partial

import termcolor

from permscan.consts import Args


def colored(text, color=None):
    if color is None:
        return text
    return termcolor.colored(text, color=color)


class colors:
    red = partial(colored, color='red')
    green = partial(colored, color='green')


def natural(v: str) -> int:
    """
    Parse a non-negative decimal integer of any size.

    >>> natural('10135681742311129')
    10135681742311129
    >>> natural('1_000')
    1000
    """
    v = v.strip()
    try:
        value = int(v, 10)
    except ValueError:
        raise ArgumentTypeError(f"{v!r} is not a decimal integer.")
    if value < 0:
        raise ArgumentTypeError(f"{v!r} is negative.")
    return value


def positive(v: str) -> int:
    value = natural(v)
    if value == 0:
        raise ArgumentTypeError("value should be at least 1.")
    return value


def args_to_dict(args: Args) -> dict:
    return {key: value for key, value in args.__dict__.items() if not key.startswith('_')}
