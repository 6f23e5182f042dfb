import pytest

from permscan.__main__ import run
from permscan.checkpoint import Hit, ScanKind, SearchCheckpoint, checkpoint_load, checkpoint_save
from permscan.search import ScanReport
from tests.utils import DATA, write_lines


class TestGen:
    @pytest.mark.parametrize(
        "args, expected",
        [
            ('gen --seq a001292 --m 3', [123, 231, 312]),
            ('gen --seq a352991 --m 3 --limit 6', [123, 132, 213, 231, 312, 321]),
            ('gen --seq a352991 -m 10 --limit 2', [10123456789, 10123456798]),
            ('gen --seq a007908 --limit 3', [1, 12, 123]),
            ('gen --seq a353025 --limit 5', [1, 1234, 1243, 1324, 1342]),
            ('gen --seq a353025 --m 5', []),
        ],
    )
    def test_terms(self, cli, args, expected):
        status, output = cli(args)
        assert status == 0
        assert output.split() == [str(v) for v in expected]

    def test_limit_required_without_m(self, cli, capsys):
        status, _ = cli('gen --seq a001292')
        assert status == 1
        assert '--limit' in capsys.readouterr().err

    def test_unknown_sequence(self, cli):
        assert cli('gen --seq a000045 --m 3')[0] == 1


class TestMember:
    def test_member(self, cli):
        status, output = cli('member 12345671089')
        assert status == 0
        assert output.splitlines() == ['member m=10', 'witness: 1 2 3 4 5 6 7 10 8 9']

    def test_tabular(self, cli):
        status, output = cli('--output-format tabular member 21')
        assert output == 'member\t2\t2,1'

    def test_non_member(self, cli):
        assert cli('member 12345670189') == (0, 'non-member')

    def test_zero(self, cli):
        assert cli('member 0')[0] == 1


class TestCheck:
    def test_power(self, cli):
        status, output = cli('check 64')
        assert status == 0
        assert 'perfect power: 2^6' in output.splitlines()
        assert 'membership: non-member' in output.splitlines()

    def test_member(self, cli):
        _, output = cli('check 65318724')
        lines = output.splitlines()
        assert 'membership: member m=8' in lines
        assert 'sieve: candidate' in lines
        assert 'perfect power: 8082^2' in lines
        assert 'mod-9 class: 0' in lines
        assert 'digital root: 9' in lines

    def test_excluded(self, cli):
        _, output = cli('check 231')
        assert 'sieve: excluded (mod9-theorem1)' in output.splitlines()
        assert 'perfect power: not a perfect power' in output.splitlines()

    @pytest.mark.parametrize("value", [0, 1])
    def test_trivial(self, cli, value):
        status, output = cli(f'check {value}')
        assert status == 0
        assert 'perfect power: trivial' in output.splitlines()

    def test_tabular(self, cli):
        _, output = cli('--output-format tabular check 64')
        assert 'perfect power\t2^6' in output.splitlines()


class TestSquares:
    def test_golden_file(self, cli):
        status, output = cli('--output-format tabular squares --m-max 10')
        assert status == 0
        assert output == (DATA / 'squares_m10.tsv').read_text().rstrip('\n')

    def test_text(self, cli):
        status, output = cli('squares --m-max 10')
        lines = output.splitlines()
        assert len(lines) == 42
        assert lines[0].split() == ['1', '13527684']
        assert lines[-1].split() == ['42', '75910168324']

    def test_nothing_below_block_8(self, cli):
        assert cli('squares --m-max 7') == (0, '')


class TestScan:
    def test_kashihara(self, cli):
        status, output = cli('scan kashihara --m-max 20')
        assert status == 0
        lines = output.splitlines()
        assert 'hits: 0' in lines
        assert lines[-1] == 'holds'

    def test_powers(self, cli):
        status, output = cli('--output-format tabular scan powers --m-max 9 --k-max 5')
        assert status == 0
        lines = output.splitlines()
        assert 'hits\t35' in lines
        assert '65318724\t8082\t2' in lines
        assert lines[-1] == 'holds'

    def test_powers_without_squares(self, cli):
        status, output = cli('--output-format tabular scan powers --m-max 10 --k-min 3 --k-max 7')
        assert status == 0
        assert 'hits\t0' in output.splitlines()

    def test_budget_refusal(self, cli, capsys):
        status, _ = cli('scan powers --m-max 13 --k-max 2')
        assert status == 1
        assert 'split the range into at least 3 parts' in capsys.readouterr().err

    def test_budget_flag(self, cli):
        assert cli('scan powers --m-max 9 --k-max 2 --budget 1000')[0] == 1

    def test_counterexample(self, cli, mocker):
        hit = Hit(3 ** 8, 81, 2)
        report = ScanReport(ScanKind.POWER_BLOCK, range(2, 5), hits=[hit], counterexamples=[hit])
        mocker.patch('permscan.__main__.conjecture1_scan', return_value=report)
        status, output = cli('scan powers --m-max 4')
        assert status == 2
        assert output.splitlines()[-1] == 'counterexample: 6561 = 81^2'

    def test_kashihara_checkpoint(self, cli, tmp_path):
        path = tmp_path / 'kashihara.cp'
        assert cli(f'scan kashihara --m-max 10 --checkpoint {path}')[0] == 0
        cp = checkpoint_load(path)
        assert (cp.kind, cp.m, cp.next_rotation) == (ScanKind.KASHIHARA, 11, 0)

    def test_resume_from_checkpoint(self, cli, tmp_path):
        path = tmp_path / 'powers.cp'
        done = [Hit(13527684, 3678, 2), Hit(34857216, 5904, 2)]
        checkpoint_save(SearchCheckpoint(ScanKind.POWER_BLOCK, 8, 2, 6000, hits=done), path)
        args = f'--output-format tabular scan powers --m-max 8 --k-max 2 --checkpoint {path}'
        status, output = cli(args)
        assert status == 0
        assert 'hits\t5' in output.splitlines()
        assert 'candidates tested\t4000' in output.splitlines()
        assert checkpoint_load(path).next_root == 10000

    def test_wrong_checkpoint_kind(self, cli, tmp_path):
        path = tmp_path / 'other.cp'
        checkpoint_save(SearchCheckpoint(ScanKind.KASHIHARA, 5, next_rotation=0), path)
        assert cli(f'scan powers --m-max 8 --checkpoint {path}')[0] == 1

    def test_malformed_checkpoint(self, cli, tmp_path, capsys):
        path = write_lines(tmp_path / 'bad.cp', ['permscan-checkpoint v1', 'kind=kashihara', 'm'])
        assert cli(f'scan kashihara --checkpoint {path}')[0] == 1
        assert 'line 3' in capsys.readouterr().err

    @pytest.mark.parametrize("workers", ['0', 'two'])
    def test_invalid_workers_env(self, cli, mocker, workers):
        mocker.patch.dict('os.environ', {'PERMSCAN_WORKERS': workers})
        assert cli('scan kashihara --m-max 4')[0] == 1

    def test_workers_env(self, cli, mocker):
        mocker.patch.dict('os.environ', {'PERMSCAN_WORKERS': '2'})
        assert cli('scan kashihara --m-max 10')[0] == 0

    def test_missing_scan_kind(self, cli):
        assert cli('scan')[0] == 1


class TestEstimate:
    def test_bound(self, cli):
        status, output = cli('estimate bound --j-max 400 --k-max 8')
        assert status == 0
        pairs = dict(line.split(': ') for line in output.splitlines())
        assert -615 < float(pairs['log10 bound']) < -614

    def test_bound_rejects_short_truncation(self, cli):
        assert cli('estimate bound --j-max 100')[0] == 1

    def test_tails(self, cli):
        status, output = cli('--output-format tabular estimate tails --m-max 10')
        assert status == 0
        lines = output.splitlines()
        assert lines[0] == 'digit\tcount\tempirical\tlaw\tdeviation'
        assert lines[2] == '1\t10\t0.181818\t0.181818\t+0.000000'
        assert 'terms\t55' in lines
        assert 'max deviation\t0.000000' in lines


class TestBFileCompare:
    def test_ok(self, cli, tmp_path):
        path = write_lines(tmp_path / 'b.txt', ['1 1', '2 12', '3 21', '4 123'])
        assert cli(f'bfile-compare --seq a001292 --file {path} --count 4') == (0, 'ok')

    def test_mismatch(self, cli, tmp_path):
        path = write_lines(tmp_path / 'b.txt', ['1 1', '2 12', '3 21', '4 123'])
        status, output = cli(f'bfile-compare --seq a007908 --file {path} --count 4')
        assert status == 0
        assert output == 'mismatch at index 3: b-file 21, generated 123'

    def test_missing_file(self, cli, tmp_path):
        assert cli(f'bfile-compare --file {tmp_path / "missing.txt"}')[0] == 1

    def test_file_required(self, cli):
        assert cli('bfile-compare --seq a001292')[0] == 1


class TestUsage:
    @pytest.mark.parametrize("args", ['', 'frobnicate', 'member', 'member abc', 'squares --what'])
    def test_errors(self, cli, args):
        assert cli(args)[0] == 1

    @pytest.mark.parametrize("args", ['--help', 'scan powers --help', '--version'])
    def test_help(self, cli, args):
        assert cli(args)[0] == 0

    def test_help_lists_commands(self, capsys):
        run(['--help'])
        out = capsys.readouterr().out
        for name in ('gen', 'member', 'check', 'scan', 'squares', 'estimate', 'bfile-compare'):
            assert name in out

    def test_help_shows_defaults(self, capsys):
        run(['scan', 'powers', '--help'])
        out = capsys.readouterr().out
        assert '100_000_000' in out
        assert 'PERMSCAN_WORKERS' in out

    def test_verbose_logs_progress(self, cli, capsys):
        cli('-v scan kashihara --m-max 8')
        assert '1..8 checked.' in capsys.readouterr().err

    @pytest.mark.parametrize("kind", ['kashihara', 'powers'])
    def test_scan_help_explains_exit_status(self, capsys, kind):
        run(['scan', kind, '--help'])
        assert 'exit status 2 when a counterexample is found' in capsys.readouterr().out
