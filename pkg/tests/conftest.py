"""Shared test plumbing: the acceptance suite records one line per
criterion and the terminal summary prints them after the run."""

ACCEPTANCE_LINES = []


def record_criterion(name: str, ok: bool) -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {name}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
