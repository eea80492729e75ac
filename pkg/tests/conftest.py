import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def record(request):
    """Append a one-line criterion outcome to the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
