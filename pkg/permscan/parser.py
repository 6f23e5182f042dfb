"""
Declarative command line: attributes of plain classes become options,
:func:`sub_command` attributes become nested sub-parsers.

>>> class Gen:
...     m: int = Opt('--m')
...     limit = Opt(default=3)
>>> class Root:
...     gen = sub_command(Gen)
>>> args = parse_args(Root, 'gen --m 10')
>>> args.gen.m, args.gen.limit
(10, 3)
"""
import argparse
import logging
import shlex
from argparse import Namespace
from typing import Dict, List, Tuple

from permscan.consts import Args, ArgsObj, SUB_COMMAND_MARK
from permscan.exceptions import UsageError
from permscan.fields import Opt
from permscan.formatters import ColoredHelpFormatter, HelpFormatter
from permscan.logging import VERBOSE
from permscan.utils import args_to_dict

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad command lines with :class:`UsageError` instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _collect_annotations(cls: type):
    ann = getattr(cls, '__annotations__', {}).copy()
    for base in cls.__bases__:
        for name, typ in _collect_annotations(base).items():
            if name not in ann:
                ann[name] = typ
    return ann


def _get_fields(cls: type) -> Dict[str, object]:
    ann = getattr(cls, '__annotations__', {})
    fields_with_value = {
        key: value
        for key, value in cls.__dict__.items()
        if not key.startswith('_') and not isinstance(value, type) and not callable(value)
    }
    fields = {k: None for k in ann if k not in fields_with_value and not k.startswith('_')}
    fields.update(**fields_with_value)
    for base in cls.__bases__:
        if base is object:
            continue
        for name, value in _get_fields(base).items():
            if name not in fields:
                fields[name] = value
    return fields


def _read_args(args: Args, parser_name='root') -> Tuple[Args, List[Opt], Dict[str, tuple]]:
    options = []
    sub_commands = {}
    args_cls = args.__class__
    ann = _collect_annotations(args_cls)
    for key, value in _get_fields(args_cls).items():
        logger.log(VERBOSE, f"reading {key!r}")
        dest = _join_names(parser_name, key)
        if hasattr(value, SUB_COMMAND_MARK):
            sub_commands[key] = _read_args(value, dest)
            continue
        if isinstance(value, Opt):
            option = value
            if not option.dest:
                option.set_dest(dest)
        else:
            option = Opt(dest=dest, default=value)
        option.guess_type(ann.get(key))
        # parsed values live on instances, the class keeps the option
        setattr(args_cls, key, option)
        options.append(option)
    return args, options, sub_commands


def _join_names(*names: str):
    return '__'.join(names)


def _uwrap(*names: str):
    return f'__{_join_names(*names)}__'


def _command_name(attr: str) -> str:
    return attr.replace('_', '-')


def _make_parser(
    name: str, args: List[Opt], sub_commands: dict, *, formatter_class=HelpFormatter, **kwargs
) -> ArgumentParser:
    """
    Recursively make parser and sub-parsers.

    :param name: name of parser prefixed with parent parser name
    :param args: options of this parser
    :param sub_commands: ``attribute -> (holder, options, sub_commands)``
    """
    logger.log(VERBOSE, f"parser {name}: {args}, sub-commands {list(sub_commands)}")
    parser = ArgumentParser(formatter_class=formatter_class, **kwargs)
    for arg in args:
        arg.inject(parser)

    if not sub_commands:
        return parser

    sub_parser = parser.add_subparsers(dest=_uwrap(name), metavar='command')
    for sub_name, (args_ins, sub_args, sub_p) in sub_commands.items():
        parser_kwargs = dict(getattr(args_ins, '__kwargs', {}))
        parser_kwargs.setdefault('description', args_ins.__class__.__doc__)
        parser_kwargs.setdefault('help', _first_line(args_ins.__class__.__doc__))
        p = _make_parser(
            name=_join_names(name, sub_name),
            args=sub_args,
            sub_commands=sub_p,
            formatter_class=formatter_class,
            add_help=False,
        )
        sub_parser.add_parser(
            _command_name(sub_name), parents=[p], formatter_class=formatter_class, **parser_kwargs
        )
    return parser


def _first_line(doc: str = None):
    if doc:
        return doc.strip().splitlines()[0]


def _set_values(
    parser_name: str, res: Args, namespace: Namespace, args: List[Opt], sub_commands: dict
):
    """Copy parsed values from ``namespace`` to ``res``; unused sub-commands are None."""
    for arg in args:
        setattr(res, arg.name, namespace.__dict__.get(arg.dest))

    chosen = getattr(namespace, _uwrap(parser_name), None)
    for name, (args_ins, sub_args, sub_c) in sub_commands.items():
        if chosen == _command_name(name):
            _set_values(_join_names(parser_name, name), args_ins, namespace, sub_args, sub_c)
            setattr(res, name, args_ins)
        else:
            setattr(res, name, None)


def stringify(args: Args) -> str:
    pairs = []
    for key, value in args_to_dict(args).items():
        if hasattr(value, SUB_COMMAND_MARK):
            value = stringify(value)
        else:
            value = repr(value)
        pairs.append(f"{key}={value}")
    return f"{args.__class__.__name__}({', '.join(pairs)})"


def _get_args_instance(args: ArgsObj):
    if isinstance(args, type):
        args = args()
    if args.__class__.__repr__ is object.__repr__:
        setattr(args.__class__, '__repr__', stringify)
    return args


def sub_command(args_cls: ArgsObj, **kwargs) -> Args:
    """
    Add sub-command to the parser. Underscores in the attribute name become dashes
    in the command name: ``bfile_compare -> bfile-compare``.

    :param args_cls: data holder
    :param kwargs: additional sub-parser kwargs (help, description, ...)
    :return: instance of :attr:`args_cls` with added metadata
    """
    args_ins = _get_args_instance(args_cls)
    setattr(args_ins, '__kwargs', kwargs)
    setattr(args_ins, SUB_COMMAND_MARK, True)
    return args_ins


def _setup_argcomplete(parser):
    try:
        import argcomplete

        argcomplete.autocomplete(parser)
    except ImportError:
        logger.debug("Argcomplete is not installed. Skipping integration.")


def make_parser(args: Args, **parser_kwargs) -> Tuple[ArgumentParser, tuple]:
    """
    Create arguments parser based on :attr:`args`.

    :param args: instance of some class with static attributes to be used as options
    :param parser_kwargs: root parser kwargs (prog, epilog, ...)
    :return: parser and tuple with options ``(main_options, sub_command_options)``
    """
    args_ins, options, sub_commands = _read_args(args)
    parser_kwargs.setdefault('formatter_class', ColoredHelpFormatter)
    parser_kwargs.setdefault('description', args_ins.__class__.__doc__)
    parser = _make_parser('root', options, sub_commands, **parser_kwargs)
    _setup_argcomplete(parser)
    return parser, (options, sub_commands)


def populate_holder(args_ins: Args, parser: ArgumentParser, options: tuple, args=None) -> Args:
    if isinstance(args, str):
        args = shlex.split(args)
    namespace = parser.parse_args(args)
    logger.log(VERBOSE, namespace)
    root_options, sub_commands = options
    _set_values('root', args_ins, namespace, root_options, sub_commands)
    return args_ins


def parse_args(args_cls: ArgsObj, args=None, **parser_kwargs) -> Args:
    """
    Parse arguments from string or command line and return populated instance of ``args_cls``.

    :param args_cls: class with defined arguments or instance of such class
    :param args: string, list of strings or ``None`` to read ``sys.argv``
    :param parser_kwargs: root parser kwargs
    :raise UsageError: command line does not match the declared options

    >>> class Data:
    ...     m_max = Opt(type=int, default=10)
    >>> parse_args(Data, '--m-max 100').m_max
    100
    """
    args_ins = _get_args_instance(args_cls)
    parser, options = make_parser(args_ins, **parser_kwargs)
    return populate_holder(args_ins, parser, options, args)
