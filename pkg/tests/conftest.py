"""Shared pytest hooks: collects acceptance-criterion verdict lines and
prints them as a terminal section, so the one-line-per-criterion summary
survives output capture."""

_criterion_lines = []


def record_criterion(line: str) -> None:
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.line(line)
