from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from apexrep import _kernels  # noqa: E402

BACKENDS = ["python"] + (["compiled"] if _kernels.compiled is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per kernel implementation."""
    impl = _kernels.python if request.param == "python" else _kernels.compiled
    monkeypatch.setattr(_kernels, "active", impl)
    monkeypatch.setattr(_kernels, "lr_is_planar", impl.lr_is_planar)
    monkeypatch.setattr(_kernels, "hv_contacts", impl.hv_contacts)
    return request.param


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion
# ---------------------------------------------------------------------------

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[str]] = {}
_owner: dict[str, int] = {}


def pytest_collection_modifyitems(session, config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[number] = title
            _owner[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _owner.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(number, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes.get(number, [])
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        elif any(r == "failed" for r in results):
            status = "FAIL"
        else:
            status = "SKIP"
        terminalreporter.write_line(f"criterion {number}: {status}  {_criteria[number]}")
