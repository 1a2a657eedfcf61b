"""Shared fixtures and the per-criterion pass/fail summary."""

from collections import OrderedDict

import numpy as np
import pytest

from analog_ofdm._backend import available_backends

_criteria = OrderedDict()


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    cid, title = marker
    entry = _criteria.setdefault(cid, {"title": title, "ok": True, "seen": False})
    if report.when == "call" or report.outcome != "passed":
        entry["seen"] = True
        if report.outcome != "passed":
            entry["ok"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.args[1] if len(m.args) > 1 else "")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: int(c[2:]) if c[2:].isdigit() else c):
        e = _criteria[cid]
        status = "PASS" if e["ok"] and e["seen"] else "FAIL"
        terminalreporter.write_line(f"{cid} {e['title']}: {status}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=sorted(available_backends()))
def kernels(request):
    """Each importable kernel backend in turn."""
    return available_backends()[request.param]
