import pytest

from respart.graph import from_edge_list, path_graph, star_graph

# (n, edges) of the named instances used across the suite
DSTAR = (6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
SPIDER222 = (7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
CAT32 = (9, [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 7), (2, 8)])
COMET = (6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
SPIDER2222 = (9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)])
SPIDER3111 = (7, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6)])
TWO_TRIANGLES = (5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _k(vertices):
    return [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1 :]]


K4_K4 = (7, _k([0, 1, 2, 3]) + _k([3, 4, 5, 6]))
# central triangle 0,1,2 with an outer triangle hanging from each corner
TRIANGLE_OF_TRIANGLES = (9, _k([0, 1, 2]) + _k([0, 3, 4]) + _k([1, 5, 6]) + _k([2, 7, 8]))
# three triangles in a chain, consecutive ones sharing a distinct vertex
TRIANGLE_CHAIN = (7, _k([0, 1, 2]) + _k([2, 3, 4]) + _k([4, 5, 6]))
# spine 0-1-2 with two leaves on each end, middle vertex of degree 2
SPINE_GAP = (7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])
# spine of four majors, each carrying three leaves
SPINE4x3 = (16, [(0, 1), (1, 2), (2, 3)] + [(s, 4 + 3 * s + j) for s in range(4) for j in range(3)])


def g(case):
    return from_edge_list(*case)


@pytest.fixture
def dstar():
    return g(DSTAR)


@pytest.fixture
def spider222():
    return g(SPIDER222)


@pytest.fixture
def cat32():
    return g(CAT32)


@pytest.fixture
def comet():
    return g(COMET)


@pytest.fixture
def k14():
    return star_graph(4)


@pytest.fixture
def p5():
    return path_graph(5)


_ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
