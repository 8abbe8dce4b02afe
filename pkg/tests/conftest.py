import pytest

from hyperchrom import lab
from hyperchrom.core import validate


@pytest.fixture
def fano():
    return lab.fano()


@pytest.fixture
def flower33():
    return lab.flower(3, 3)


@pytest.fixture
def two_disjoint():
    return validate("abcd", [["a", "b"], ["c", "d"]], "two-disjoint")


@pytest.fixture
def triangle3():
    """Three triples closing a cycle: {x,a,y}, {y,b,z}, {z,c,x}."""
    return validate(list("xaybzc"), [["x", "a", "y"], ["y", "b", "z"], ["z", "c", "x"]], "tri3")


@pytest.fixture
def triangle2():
    return validate("abc", [["a", "b"], ["b", "c"], ["a", "c"]], "tri2")


@pytest.fixture
def single3():
    return validate("abc", [["a", "b", "c"]], "single")


def fano_edge(H, line):
    """Index of the Fano line written as a string such as '246'."""
    return H.edges.index(frozenset(H.index(ch) for ch in line))


# one PASS/FAIL line per acceptance criterion, taken from the real outcome
_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        reason = ""
        if rep.failed:
            reason = str(rep.longrepr.reprcrash.message).splitlines()[0] if hasattr(rep.longrepr, "reprcrash") else "error"
        _criteria.append(("PASS" if rep.passed else "FAIL", mark.args[0], reason))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, reason in _criteria:
        terminalreporter.write_line(f"{status}  {label}" + (f"  [{reason}]" if reason else ""))
