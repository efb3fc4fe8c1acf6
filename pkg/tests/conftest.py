"""Shared fixtures for the verification suites.

The bundled tables are verified lazily and cached for the whole session so
the table-map tests and the acceptance suite share one run per table.  The
acceptance tests append one summary line per criterion; the terminal hook
prints them at the end of the run so each criterion's pass/fail verdict is
visible even when pytest captures stdout.
"""

import pytest

from duadic.verify import verify_table

_CACHE: dict[int, list] = {}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table_reports():
    """Callable fixture: table_reports(table_id) -> cached verification run."""

    def get(table_id: int):
        if table_id not in _CACHE:
            _CACHE[table_id] = verify_table(table_id)
        return _CACHE[table_id]

    return get


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
