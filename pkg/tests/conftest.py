CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance pass/fail lines after the captured-output wall."""
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
