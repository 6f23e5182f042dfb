import pytest

from permscan.display import Output, render_pairs, render_table
from permscan.exceptions import InvalidArgument


def _norm(text: str):
    return '\n'.join(line.rstrip() for line in text.strip().splitlines())


def test_tabular_table_is_unpadded():
    rows = [(1, 13527684), (36, 14102987536)]
    assert render_table(rows, fmt='tabular') == '1\t13527684\n36\t14102987536'


def test_tabular_big_integers_are_exact():
    value = 10 ** 40 + 1
    assert render_table([(value, 2)], fmt='tabular') == f'{value}\t2'
    assert str(value) in render_table([(value, 2)])


def test_tabular_headers():
    text = render_table([(4123, 4, 2)], headers=('value', 'base', 'exponent'), fmt='tabular')
    assert text.splitlines() == ['value\tbase\texponent', '4123\t4\t2']


def test_text_table():
    text = _norm(render_table([(0, 1), (1, 10)], headers=('digit', 'count')))
    header, rule, *rows = text.splitlines()
    assert header.split() == ['digit', 'count']
    assert set(rule) == {'-', ' '}
    assert [row.split() for row in rows] == [['0', '1'], ['1', '10']]


@pytest.mark.parametrize(
    "fmt, expected", [('text', 'membership: member m=10'), ('tabular', 'membership\tmember m=10')]
)
def test_pairs(fmt, expected):
    assert render_pairs([('membership', 'member m=10')], fmt) == expected


class TestOutput:
    def test_collects_lines(self):
        lines = []
        out = Output('tabular', print_fn=lines.append)
        out.line('ok')
        out.lines([1, 12])
        out.table([])
        out.verdict(False, 'counterexample')
        assert lines == ['ok', '1', '12', 'counterexample']

    def test_text_verdict_without_colors(self):
        lines = []
        Output('text', print_fn=lines.append).verdict(True, 'holds')
        assert lines == ['holds']

    def test_unknown_format(self):
        with pytest.raises(InvalidArgument):
            Output('json')
