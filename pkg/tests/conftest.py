import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from piclass import named_group  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def group():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = named_group(spec)
        return cache[spec]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
