import pytest
from click.testing import CliRunner

from lawsort.core.mode import Mode, set_mode


@pytest.fixture(autouse=True)
def checked_mode():
    """Every test starts (and leaves) in checked mode, whatever LAWSORT_MODE says."""
    set_mode(Mode.CHECKED)
    yield
    set_mode(Mode.CHECKED)


@pytest.fixture
def cli_runner():
    return CliRunner()
