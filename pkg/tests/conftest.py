import helpers


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(helpers.ACCEPTANCE):
        terminalreporter.write_line(line)
