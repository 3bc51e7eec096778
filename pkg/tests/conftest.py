import pytest

from bandcube.graph import Graph, LinearOrdering

_criteria = []


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def c4_ordering():
    # u1, u2, u4, u3
    return LinearOrdering((1, 2, 4, 3))


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; shown in the terminal summary."""

    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        _criteria.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)
