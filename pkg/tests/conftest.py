# filled by the acceptance suite: (number, title, passed, seconds, limit)
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, secs, limit in sorted(ACCEPTANCE):
        bound = f" (limit {limit:g}s)" if limit else ""
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status} criterion {num:2d}: {title} [{secs:.2f}s{bound}]")
