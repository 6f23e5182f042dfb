__version__ = "0.1.0"

from permscan.bfile import compare_bfile, read_bfile
from permscan.checkpoint import Hit, ScanKind, SearchCheckpoint, checkpoint_load, checkpoint_save
from permscan.estimate import (
    BoundEstimate,
    TailDistribution,
    bound_term_log10,
    kashihara_bound,
    kashihara_bound_log10,
    trailing_digit_empirical,
    trailing_digit_law,
)
from permscan.exceptions import (
    BFileError,
    BudgetExceeded,
    CheckpointError,
    InvalidArgument,
    PermscanException,
    TrivialPower,
    UsageError,
)
from permscan.filters import (
    FilterVerdict,
    Reason,
    candidate_filter,
    digital_root,
    remark1_passes,
    theorem1_excludes,
    triangular_residue,
)
from permscan.powercheck import (
    PowerWitness,
    integer_nth_root,
    is_perfect_square,
    perfect_power_decompose,
)
from permscan.search import (
    ScanReport,
    conjecture1_scan,
    kashihara_scan,
    partition,
    power_scan_block,
    root_range,
    scan_bases,
)
from permscan.sequences import (
    DigitMultiset,
    TokenSeq,
    block_digit_length,
    block_for_length,
    block_multiset,
    block_terms,
    concat_range,
    cyclic_rotations,
    digit_multiset,
    enumerate_block,
    is_candidate,
    is_candidate_block,
    membership,
    minimal_arrangement,
    rotation,
    sorted_rotations,
    terms,
)
