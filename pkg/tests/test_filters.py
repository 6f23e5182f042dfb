import pytest

from permscan.exceptions import InvalidArgument
from permscan.filters import (
    CANDIDATE,
    FilterVerdict,
    Reason,
    block_residue_matches,
    candidate_filter,
    digital_root,
    remark1_passes,
    residue_mod9,
    theorem1_excludes,
    triangular_residue,
)
from permscan.sequences import concat_range, cyclic_rotations


@pytest.mark.parametrize("m", range(1, 60))
def test_triangular_residue_is_block_class(m):
    assert triangular_residue(m) == m * (m + 1) // 2 % 9
    assert triangular_residue(m) == residue_mod9(concat_range(m))


@pytest.mark.parametrize(
    "m, excluded",
    [(2, True), (3, True), (4, False), (7, False), (9, False), (13, False), (447, True)],
)
def test_theorem1_excludes(m, excluded):
    assert theorem1_excludes(m) is excluded


def test_theorem1_matches_the_big_integer_test():
    for m in range(2, 200):
        assert block_residue_matches(concat_range(m)) != theorem1_excludes(m)


@pytest.mark.parametrize("m", [0, 1])
def test_theorem1_needs_two_tokens(m):
    with pytest.raises(InvalidArgument):
        theorem1_excludes(m)


def test_surviving_blocks_are_zero_or_one():
    assert {triangular_residue(m) for m in range(2, 100) if not theorem1_excludes(m)} == {0, 1}


def test_sieve_exhaustive():
    for m in range(2, 10 ** 6 + 1):
        residue = m * (m + 1) // 2 % 9
        assert triangular_residue(m) == residue, m
        assert theorem1_excludes(m) is (residue in (3, 6)), m
        if residue not in (3, 6):
            assert residue in (0, 1), m


@pytest.mark.parametrize(
    "x, passes",
    [
        (25, True),
        (75, True),
        (100, True),
        (35, False),
        (10, False),
        (16, True),
        (36, True),
        (26, False),
        (1234, True),
        (13527684, True),
    ],
)
def test_remark1(x, passes):
    assert remark1_passes(x) is passes


def test_remark1_holds_for_every_power():
    for base in range(4, 400):
        for k in (2, 3, 5):
            assert remark1_passes(base ** k)


def test_remark1_needs_two_digits():
    with pytest.raises(InvalidArgument):
        remark1_passes(9)


def test_digital_root():
    assert [digital_root(x) for x in (0, 9, 10, 99, 123456789)] == [0, 9, 1, 9, 9]


class TestCandidateFilter:
    def test_excluded_block(self):
        verdict = candidate_filter(231, 3)
        assert verdict.excluded
        assert verdict.reason is Reason.MOD9_THEOREM1
        assert str(verdict) == 'excluded (mod9-theorem1)'

    def test_trailing_digits(self):
        # block 10 survives the mod 9 sieve, this rotation ends in 10
        verdict = candidate_filter(cyclic_rotations(10)[0], 10)
        assert verdict == FilterVerdict(True, Reason.TRAILING_MOD100)

    def test_candidate(self):
        assert candidate_filter(1234, 4) is CANDIDATE
        assert str(CANDIDATE) == 'candidate'
        assert candidate_filter(1, 1) is CANDIDATE

    def test_inconsistent_verdict(self):
        with pytest.raises(InvalidArgument):
            FilterVerdict(True)
        with pytest.raises(InvalidArgument):
            FilterVerdict(False, Reason.TRAILING_MOD100)
