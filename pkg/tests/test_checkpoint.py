import pytest

from permscan.checkpoint import Hit, ScanKind, SearchCheckpoint, checkpoint_load, checkpoint_save
from permscan.consts import CHECKPOINT_HEADER
from permscan.exceptions import CheckpointError
from tests.utils import write_lines


@pytest.fixture()
def power_cp():
    return SearchCheckpoint(
        ScanKind.POWER_BLOCK,
        9,
        exponent=2,
        next_root=20000,
        hits=[Hit(13527684, 3678, 2), Hit(139854276, 11826, 2)],
    )


def test_save_and_load(tmp_path, power_cp):
    path = tmp_path / 'scan.cp'
    checkpoint_save(power_cp, path)
    assert checkpoint_load(path) == power_cp
    assert path.read_text().splitlines() == [
        CHECKPOINT_HEADER,
        'kind=power-block',
        'm=9',
        'exponent=2',
        'next_root=20000',
        'hit=13527684,3678,2',
        'hit=139854276,11826,2',
    ]


def test_save_replaces_previous(tmp_path, power_cp):
    path = tmp_path / 'scan.cp'
    checkpoint_save(SearchCheckpoint(ScanKind.KASHIHARA, 4, next_rotation=0), path)
    checkpoint_save(power_cp, path)
    assert checkpoint_load(path) == power_cp
    assert [p.name for p in tmp_path.iterdir()] == ['scan.cp']


def test_kashihara_lines():
    cp = SearchCheckpoint(ScanKind.KASHIHARA, 448, next_rotation=0)
    assert cp.lines() == [CHECKPOINT_HEADER, 'kind=kashihara', 'm=448', 'next_rotation=0']


def test_big_values_survive(tmp_path):
    value = 10135681742311129
    cp = SearchCheckpoint(
        ScanKind.POWER_BLOCK, 13, exponent=2, next_root=10 ** 40, hits=[Hit(value, 100676123, 2)]
    )
    path = tmp_path / 'big.cp'
    checkpoint_save(cp, path)
    assert checkpoint_load(path).next_root == 10 ** 40


@pytest.mark.parametrize(
    "lines, line",
    [
        (['permscan-checkpoint v0', 'kind=kashihara'], 1),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm'], 3),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'color=red'], 3),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=4', 'm=5'], 4),
        ([CHECKPOINT_HEADER, 'kind=cubes', 'm=4'], 2),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=four'], 3),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=-4'], 3),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=4', 'next_rotation=0', 'hit=65,8,2'], 5),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=4', 'hit=64,8'], 4),
        ([CHECKPOINT_HEADER, 'kind=kashihara', 'm=4'], 4),
        ([CHECKPOINT_HEADER, 'kind=power-block', 'm=4', 'next_root=40'], 5),
        ([CHECKPOINT_HEADER, 'm=4'], 3),
    ],
)
def test_malformed(tmp_path, lines, line):
    path = write_lines(tmp_path / 'bad.cp', lines)
    with pytest.raises(CheckpointError) as e:
        checkpoint_load(path)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}: ")


def test_truncated(tmp_path, power_cp):
    path = tmp_path / 'scan.cp'
    checkpoint_save(power_cp, path)
    text = path.read_text()
    path.write_text(text[:-5])
    with pytest.raises(CheckpointError) as e:
        checkpoint_load(path)
    assert e.value.line == 7


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        checkpoint_load(tmp_path / 'nope.cp')


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind=ScanKind.POWER_BLOCK, m=4, next_root=10),
        dict(kind=ScanKind.POWER_BLOCK, m=4, exponent=1, next_root=10),
        dict(kind=ScanKind.POWER_BLOCK, m=4, exponent=2),
        dict(kind=ScanKind.KASHIHARA, m=4),
    ],
)
def test_incomplete_checkpoint(kwargs):
    with pytest.raises(CheckpointError):
        SearchCheckpoint(**kwargs)
