# Acceptance tests append (criterion, passed, detail) here; the summary hook
# prints one line per criterion at the end of the run.
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{num}] {'PASS' if ok else 'FAIL'}  {name}: {detail}")
