"""
Command line interface.

Exit status: 0 when the command completed and the conjecture under test holds, a
b-file mismatch included; 2 when a scan found a counterexample; 1 on usage, input
or budget errors.
"""
import logging
import os
import sys
from functools import partial
from itertools import islice
from typing import Optional

from permscan import __version__
from permscan.bfile import compare_bfile
from permscan.checkpoint import SearchCheckpoint, checkpoint_load, checkpoint_save
from permscan.consts import DEFAULT_BUDGET, DEFAULT_CHUNK, DEFAULT_J_MAX, DEFAULT_K_MAX, WORKERS_ENV
from permscan.display import FORMATS, Output
from permscan.estimate import kashihara_bound, trailing_digit_empirical, trailing_digit_law
from permscan.exceptions import PermscanException, TrivialPower, UsageError
from permscan.fields import Arg, Opt
from permscan.filters import candidate_filter, digital_root, remark1_passes, residue_mod9
from permscan.logging import setup_logging
from permscan.parser import parse_args, sub_command
from permscan.powercheck import perfect_power_decompose
from permscan.search import ScanReport, conjecture1_scan, kashihara_scan
from permscan.sequences import SEQUENCES, block_terms, membership, terms
from permscan.utils import positive

logger = logging.getLogger('permscan.cli')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2

SCAN_EPILOG = "exit status 2 when a counterexample is found, 0 when the conjecture holds"


class GenArgs:
    """Print terms of a sequence, one per line."""

    seq = Opt(choices=SEQUENCES, default='a352991', help="OEIS name of the sequence")
    m: int = Opt('--m', help="only the terms of block m; the whole sequence when omitted")
    limit: int = Opt(type=positive, help="stop after this many terms, required without --m")


class MemberArgs:
    """Find the block of a value and the token order that spells it."""

    value: int = Arg(help="positive integer")


class CheckArgs:
    """Run every sieve and the perfect power test on a value."""

    value: int = Arg(help="non-negative integer")


class KashiharaArgs:
    """Look for perfect powers among the cyclic rotations of 1..m."""

    m_max: int = Opt(default=10, help="last block to scan")
    checkpoint: str = Opt(help="resume from this file if it exists and save progress to it")
    workers: int = Opt(default=1, type=positive, env=WORKERS_ENV, help="worker processes")


class PowersArgs:
    """Find every perfect power of the surviving blocks through its base."""

    m_max: int = Opt(default=10, help="last block to scan")
    checkpoint: str = Opt(help="resume from this file if it exists and save progress to it")
    workers: int = Opt(default=1, type=positive, env=WORKERS_ENV, help="worker processes")
    k_max: int = Opt(default=3, help="largest exponent, only primes are scanned")
    k_min: int = Opt(default=2, help="smallest exponent, 3 skips the squares")
    budget: int = Opt(
        default=DEFAULT_BUDGET, type=positive, help="largest root range scanned in one go"
    )
    chunk_size: int = Opt(
        default=DEFAULT_CHUNK, type=positive, help="bases between two checkpoints"
    )


class ScanArgs:
    """Resumable brute force scans."""

    kashihara = sub_command(KashiharaArgs, epilog=SCAN_EPILOG)
    powers = sub_command(PowersArgs, epilog=SCAN_EPILOG)


class SquaresArgs:
    """Numbered list of the perfect squares in blocks 2..m."""

    m_max: int = Opt(default=10, help="last block to scan")
    workers: int = Opt(default=1, type=positive, env=WORKERS_ENV, help="worker processes")


class BoundArgs:
    """Expected number of perfect powers among the rotation terms, as log10."""

    j_max: int = Opt(default=DEFAULT_J_MAX, help="truncate the sum over digit lengths 4j")
    k_max: int = Opt(default=DEFAULT_K_MAX, help="truncate the sum over exponents")


class TailsArgs:
    """Last digits of the rotation terms against their limit law."""

    m_max: int = Opt(default=10, help="last block to tally")


class EstimateArgs:
    """Probabilistic side computations."""

    bound = sub_command(BoundArgs)
    tails = sub_command(TailsArgs)


class BFileArgs:
    """Compare generated terms with an OEIS b-file."""

    seq = Opt(choices=SEQUENCES, default='a352991', help="OEIS name of the sequence")
    file: str = Opt(required=True, help="path to the b-file")
    count: int = Opt(default=100, type=positive, help="number of leading terms to compare")


class Args:
    """Concatenated permutations of 1..m: sequences, sieves and perfect power searches."""

    output_format = Opt(choices=FORMATS, default='text', help="'tabular' is tab separated")
    verbose: int = Opt('-v', action='count', default=0, help="-v info, -vv debug, -vvv trace")
    version = Opt(action='version', version=f'%(prog)s {__version__}')
    gen = sub_command(GenArgs)
    member = sub_command(MemberArgs)
    check = sub_command(CheckArgs)
    scan = sub_command(ScanArgs)
    squares = sub_command(SquaresArgs)
    estimate = sub_command(EstimateArgs)
    bfile_compare = sub_command(BFileArgs)


def gen(args: GenArgs, out: Output) -> int:
    if args.m is not None:
        values = block_terms(args.seq, args.m, args.limit)
    elif args.limit is None:
        raise UsageError("--limit is required when --m is not given")
    else:
        values = islice(terms(args.seq), args.limit)
    out.lines(values)
    return EXIT_OK


def member(args: MemberArgs, out: Output) -> int:
    witness = membership(args.value)
    if witness is None:
        out.line('non-member')
    elif out.is_text:
        out.line(f"member m={witness.m}")
        out.line(f"witness: {' '.join(map(str, witness.order))}")
    else:
        out.line(f"member\t{witness.m}\t{','.join(map(str, witness.order))}")
    return EXIT_OK


def _power_verdict(x: int) -> str:
    try:
        witness = perfect_power_decompose(x)
    except TrivialPower:
        return 'trivial'
    return str(witness) if witness else 'not a perfect power'


def check(args: CheckArgs, out: Output) -> int:
    x = args.value
    pairs = [('mod-9 class', residue_mod9(x)), ('digital root', digital_root(x))]
    if x >= 10:
        pairs.append(('trailing digits', 'pass' if remark1_passes(x) else 'fail'))
    witness = membership(x) if x > 0 else None
    if witness is None:
        pairs.append(('membership', 'non-member'))
    else:
        pairs.append(('membership', f"member m={witness.m}"))
        pairs.append(('sieve', candidate_filter(x, witness.m)))
    pairs.append(('perfect power', _power_verdict(x)))
    out.pairs(pairs)
    return EXIT_OK


def _resume(path: Optional[str]) -> Optional[SearchCheckpoint]:
    if not path or not os.path.exists(path):
        return None
    cp = checkpoint_load(path)
    logger.info(f"resuming from {path}: m={cp.m}, {len(cp.hits)} hits so far")
    return cp


def _saver(path: Optional[str]):
    if path:
        return partial(checkpoint_save, path=path)


def _report(report: ScanReport, out: Output) -> int:
    blocks = report.blocks_checked
    out.pairs(
        [
            ('scan', report.kind.value),
            ('blocks', f"{blocks.start}..{blocks.stop - 1}"),
            ('candidates tested', report.candidates_tested),
            ('filtered by mod 9', report.filtered_by_mod9),
            ('filtered by trailing digits', report.filtered_by_trailing),
            ('hits', len(report.hits)),
            ('elapsed', f"{report.elapsed:.2f}s"),
        ]
    )
    out.table([tuple(hit) for hit in report.hits], headers=('value', 'base', 'exponent'))
    if report.holds:
        out.verdict(True, 'holds')
        return EXIT_OK
    for hit in report.counterexamples:
        out.verdict(False, f"counterexample: {hit}")
    return EXIT_COUNTEREXAMPLE


def scan_kashihara(args: KashiharaArgs, out: Output) -> int:
    report = kashihara_scan(
        args.m_max,
        _resume(args.checkpoint),
        workers=args.workers,
        on_checkpoint=_saver(args.checkpoint),
    )
    return _report(report, out)


def scan_powers(args: PowersArgs, out: Output) -> int:
    report = conjecture1_scan(
        args.m_max,
        args.k_max,
        _resume(args.checkpoint),
        k_min=args.k_min,
        budget=args.budget,
        workers=args.workers,
        chunk_size=args.chunk_size,
        on_checkpoint=_saver(args.checkpoint),
    )
    return _report(report, out)


def squares(args: SquaresArgs, out: Output) -> int:
    report = conjecture1_scan(args.m_max, 2, workers=args.workers)
    out.table([(i, hit.value) for i, hit in enumerate(report.hits, start=1)])
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


def estimate_bound(args: BoundArgs, out: Output) -> int:
    res = kashihara_bound(args.j_max, args.k_max)
    out.pairs(
        [
            ('log10 bound', f"{res.log10_value:.4f}"),
            ('log10 k=2 band', f"{res.log10_square_band:.4f}"),
            ('k=2 share', f"{res.square_share:.6f}"),
            ('log10 tail', f"{res.log10_tail:.4f}"),
        ]
    )
    return EXIT_OK


def estimate_tails(args: TailsArgs, out: Output) -> int:
    dist = trailing_digit_empirical(args.m_max)
    rows = []
    for digit, (n, freq) in enumerate(zip(dist.counts, dist.frequencies())):
        law = trailing_digit_law(digit)
        deviation = float(freq - law)
        rows.append((digit, n, f"{float(freq):.6f}", f"{float(law):.6f}", f"{deviation:+.6f}"))
    out.table(rows, headers=('digit', 'count', 'empirical', 'law', 'deviation'))
    out.pairs([('terms', dist.total), ('max deviation', f"{float(dist.max_deviation()):.6f}")])
    return EXIT_OK


def bfile_compare(args: BFileArgs, out: Output) -> int:
    mismatch = compare_bfile(args.seq, args.file, args.count)
    if mismatch is None:
        out.verdict(True, 'ok')
    else:
        out.verdict(False, str(mismatch))
    return EXIT_OK


def _dispatch(args: Args, out: Output) -> int:
    if args.gen:
        return gen(args.gen, out)
    if args.member:
        return member(args.member, out)
    if args.check:
        return check(args.check, out)
    if args.scan and args.scan.kashihara:
        return scan_kashihara(args.scan.kashihara, out)
    if args.scan and args.scan.powers:
        return scan_powers(args.scan.powers, out)
    if args.squares:
        return squares(args.squares, out)
    if args.estimate and args.estimate.bound:
        return estimate_bound(args.estimate.bound, out)
    if args.estimate and args.estimate.tails:
        return estimate_tails(args.estimate.tails, out)
    if args.bfile_compare:
        return bfile_compare(args.bfile_compare, out)
    raise UsageError("a command is required, see --help")


def run(argv=None, print_fn=None) -> int:
    """
    Parse ``argv`` and run the chosen command.

    :param argv: arguments without the program name, ``sys.argv[1:]`` when ``None``
    :param print_fn: receives every output line, ``print`` by default
    :return: exit status
    """
    try:
        args = parse_args(Args, argv, prog='permscan')
    except SystemExit as e:
        # --help and --version
        return e.code or EXIT_OK
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    setup_logging(args.verbose)
    try:
        return _dispatch(args, Output(args.output_format, print_fn))
    except (PermscanException, OSError) as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
