from typing import TypeVar, Union, Type


Args = TypeVar('Args')
ArgsObj = Union[Args, Type[Args]]

# arbitrary-precision non-negative integer; python ints already are
Natural = int

SUB_COMMAND_MARK = '__sub_command'

# blocks with these m (mod 9) hold no perfect power
EXCLUDED_MOD9 = frozenset({2, 3, 5, 6})
# digit-sum classes left for every non-excluded block
CANDIDATE_RESIDUES = frozenset({0, 1})
# residues mod 9 that are divisible by 3 but not by 9
SINGLE_THREE_RESIDUES = frozenset({3, 6})
# last two digits allowed for a perfect power divisible by 5
FIVE_TAILS = frozenset({0, 25, 75})

SQUARE_MODULI = (64, 63)

DEFAULT_BUDGET = 10 ** 8
DEFAULT_CHUNK = 10 ** 6

BOUND_J_START = 309
DEFAULT_J_MAX = 1000
DEFAULT_K_MAX = 64

CHECKPOINT_HEADER = 'permscan-checkpoint v1'

WORKERS_ENV = 'PERMSCAN_WORKERS'
