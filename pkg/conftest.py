import pytest

from permscan.__main__ import run


@pytest.fixture(autouse=True)
def no_color(mocker):
    mocker.patch.dict('os.environ', {'ANSI_COLORS_DISABLED': '1'})


@pytest.fixture()
def cli():
    """Run the command line and collect what it prints."""

    def call(args: str):
        lines = []
        status = run(args.split(), print_fn=lines.append)
        return status, '\n'.join(lines)

    return call
