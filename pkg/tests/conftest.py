import re
from collections import OrderedDict

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_")

_results: "OrderedDict[int, list]" = OrderedDict()


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results.setdefault(int(m.group(1)), []).append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for ac in sorted(_results):
        rows = _results[ac]
        ok = sum(1 for _, passed in rows if passed)
        status = "PASS" if ok == len(rows) else "FAIL"
        tr.write_line(f"AC{ac}: {status} ({ok}/{len(rows)} checks)")
        for nodeid, passed in rows:
            if not passed:
                tr.write_line(f"    failed: {nodeid.split('::', 1)[1]}")
