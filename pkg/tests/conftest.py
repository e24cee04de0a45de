import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, printed every run."""
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            # a test both set up and run appears once per phase; any
            # non-pass phase makes the criterion fail
            if outcomes.get(name) in (None, "passed"):
                outcomes[name] = status
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(outcomes):
        flag = "PASS" if outcomes[name] == "passed" else "FAIL"
        terminalreporter.write_line("%s  %s" % (flag, name))
