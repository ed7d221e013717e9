"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line per criterion."""
from collections import OrderedDict

_outcomes: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            num, title = mark.args
            entry = _outcomes.setdefault(num, {"title": title, "tests": {}})
            entry["tests"][item.nodeid] = None
    for num in sorted(_outcomes):
        _outcomes.move_to_end(num)


def pytest_runtest_logreport(report):
    for entry in _outcomes.values():
        if report.nodeid in entry["tests"]:
            if report.when == "call" or report.failed or report.skipped:
                prev = entry["tests"][report.nodeid]
                if prev in (None, "passed"):
                    entry["tests"][report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num, entry in _outcomes.items():
        states = list(entry["tests"].values())
        if any(s is None for s in states):
            status = "NOT RUN"
        elif all(s == "passed" for s in states):
            status = "PASS"
        else:
            status = "FAIL"
        failed = [nid.split("::")[-1] for nid, s in entry["tests"].items() if s not in ("passed", None)]
        detail = f"  ({', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {num:2d} {status:7s} {entry['title']}{detail}")
