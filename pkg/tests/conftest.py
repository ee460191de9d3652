from __future__ import annotations

import support


def pytest_terminal_summary(terminalreporter):
    if support.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in support.RESULTS:
            terminalreporter.write_line(line)
