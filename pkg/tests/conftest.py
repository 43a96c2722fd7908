from __future__ import annotations

import pytest

from fuzzyconn import bundled_chd_model, induced_subgraph
from fuzzyconn.reference import nontransitive_graph, sample_graph


@pytest.fixture
def sample():
    return sample_graph()


@pytest.fixture
def sample_h(sample):
    return induced_subgraph(sample, {"b", "c", "d"})


@pytest.fixture
def nontransitive():
    return nontransitive_graph()


@pytest.fixture
def chd():
    return bundled_chd_model()


# --- acceptance summary: one PASS/FAIL line per criterion

_criteria: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, text = marker.args
    ok = report.passed if report.when == "call" else False
    prev = _criteria.get(number)
    _criteria[number] = (text, ok and (prev is None or prev[1]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {text}")
