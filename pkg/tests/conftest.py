"""Shared pytest plumbing: print acceptance verdicts after the run."""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, ok, took in sorted(verdicts):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"{status} criterion {number:2d} ({took:7.3f}s): {label}"
        )
