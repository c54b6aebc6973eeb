import pytest
from hypothesis import strategies as st

from safsolver import FIXTURES, load_fixture, validate
from safsolver.generate import random_saf


@pytest.fixture
def motivating():
    return load_fixture("motivating")


@pytest.fixture
def status_lift():
    return load_fixture("status_lift")


@pytest.fixture(scope="session")
def fixture_corpus():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture
def empty_saf():
    return validate([])


def safs(max_args=6):
    """Hypothesis strategy for valid SAFs over a1..an."""
    return st.builds(
        random_saf,
        st.randoms(use_true_random=False),
        st.integers(min_value=0, max_value=max_args),
        st.floats(min_value=0.0, max_value=0.45),
        st.floats(min_value=0.0, max_value=0.6),
    )


# --- acceptance summary ------------------------------------------------------

_labels = {}
_outcomes = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _labels[item.nodeid] = marker.args[0]


def pytest_runtest_logreport(report):
    if report.nodeid not in _labels:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, label in _labels.items():
        if nodeid in _outcomes:
            terminalreporter.write_line(f"{_outcomes[nodeid]}  {label}")
