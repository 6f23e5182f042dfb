import logging
import os
from argparse import ArgumentParser, ArgumentTypeError
from typing import Optional

from permscan.exceptions import UsageError
from permscan.logging import VERBOSE
from permscan.utils import natural

logger = logging.getLogger(__name__)

_NO_TYPE_ACTIONS = ('store_const', 'store_true', 'store_false', 'count', 'version')


class Opt:
    """Optional argument (eg: --m-max, -v)"""

    def __init__(
        self,
        *options: str,
        dest: str = None,
        default=None,
        type=None,
        help=None,
        metavar=None,
        action=None,
        env: str = None,
        **kwargs,
    ):
        """
        :param options: extra option strings, eg ``'-v'``; the attribute name is always added
        :param dest: destination in the namespace, prefixed with sub-parser names
        :param default: default value, its type is used when :attr:`type` is not given
        :param type: type of the value; ``int`` options accept integers of any size
        :param help: help text
        :param metavar: placeholder shown in help: ``--m-max M``
        :param action: argparse action: count, version, ...
        :param env: environment variable that overrides :attr:`default`
        :param kwargs: extra arguments for ``parser.add_argument`` (choices, required, ...)
        """
        self.option_names = list(options)
        self.metavar = metavar
        self.dest = None
        self.set_dest(dest)
        self.type = type
        self.default = default
        self.help = help
        self.action = action
        self.env = env
        self.extra = kwargs

    def __str__(self):
        names = ', '.join(self.options) or '-'
        type_name = getattr(self.type, '__name__', None)
        return f"{self.__class__.__name__}({names}, type={type_name}, default={self.default!r})"

    def __repr__(self):
        return str(self)

    @property
    def name(self):
        """Destination w/o parser prefix."""
        if self.dest:
            return self.dest.split('__')[-1]

    @property
    def options(self):
        return self.make_options(*self.option_names)

    def set_dest(self, dest: Optional[str]):
        """Setup destination and related attributes. Should be called only once."""
        if not dest:
            return
        if self.dest:
            logger.warning("destination was already defined")
            return
        self.dest = dest
        self.option_names += [self.name]
        self.metavar = self.metavar or self.make_metavar()
        return self.dest

    @staticmethod
    def _spell(opt: str) -> str:
        if not opt[0].isalpha():
            return opt
        opt = opt.replace('_', '-')
        if len(opt) == 1:
            return f'-{opt}'
        return f'--{opt}'

    def make_options(self, *options: str):
        """
        >>> Opt().make_options('m_max', 'k', '--m')
        ['--m-max', '-k', '--m']
        """
        return list(dict.fromkeys(map(self._spell, options)))

    def make_metavar(self):
        if self.dest:
            return self.name.split('_')[-1][0].upper()

    def guess_type(self, annotation=None):
        """User specified type -> annotation -> type of default -> str."""
        if self.type is None:
            if annotation is not None:
                self.type = annotation
            elif self.default is not None:
                self.type = type(self.default)
            else:
                self.type = str
        logger.log(VERBOSE, f"{self.dest}: type {self.type}")
        return self.type

    @property
    def factory(self):
        # every integer on the command line is a natural number of unbounded size
        if self.type is int:
            return natural
        return self.type

    def resolve_default(self):
        """Value of :attr:`env` when it is set, :attr:`default` otherwise."""
        if not self.env or self.env not in os.environ:
            return self.default
        raw = os.environ[self.env]
        try:
            return self.factory(raw)
        except (ArgumentTypeError, ValueError) as e:
            raise UsageError(f"invalid value of {self.env}: {e}")

    def _params(self, **kwargs):
        params = dict(
            dest=self.dest,
            default=self.resolve_default(),
            type=self.factory,
            help=self.help,
            metavar=self.metavar,
            action=self.action,
        )
        params.update(**kwargs)
        params.update(**self.extra)
        if self.action in _NO_TYPE_ACTIONS:
            params.pop('type')
            params.pop('metavar')
        return {k: v for k, v in params.items() if v is not None}

    def inject(self, parser: ArgumentParser):
        logger.log(VERBOSE, f"adding {self.dest} to the parser")
        params = self._params()
        action = parser.add_argument(*self.options, **params)
        setattr(action, '__meta', self)  # read by HelpFormatter.notes
        return action


class Arg(Opt):
    """Positional argument"""

    def make_metavar(self):
        return self.name

    def make_options(self, *options: str):
        return []
