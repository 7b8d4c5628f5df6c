import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion, uncaptured."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance")
    if mod is None:
        return
    results = getattr(mod, "CRITERION_RESULTS", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        status = "PASS" if results[n] else "FAIL"
        terminalreporter.write_line("CRITERION {:2d}: {}".format(n, status))
