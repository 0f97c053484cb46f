import pytest

from bierfan import bier_sphere, enumerate_complexes, from_facets

ACCEPTANCE_LINES = []


def record(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def example_K():
    return from_facets(3, [[1], [2, 3]])


@pytest.fixture(scope="session")
def example_bier(example_K):
    return bier_sphere(example_K)


@pytest.fixture(scope="session")
def complexes():
    """All complexes on [m] other than the simplex, keyed by m, for m = 2..5."""
    return {m: list(enumerate_complexes(m)) for m in range(2, 6)}


@pytest.fixture(scope="session")
def biers(complexes):
    return {m: [bier_sphere(K) for K in ks] for m, ks in complexes.items()}
