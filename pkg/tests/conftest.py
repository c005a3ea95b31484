import pytest

from branecharge.fan import normal_fan
from branecharge.polytope import LatticePolytope
from branecharge.varieties import FOURFOLDS, SURFACES, THREEFOLDS, fixture_fans


def simplex(n):
    """conv(e_1, ..., e_n, -sum e_i): the polytope spanned by the rays of P^n."""
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return LatticePolytope(basis + [(-1,) * n])


@pytest.fixture(scope="session")
def surfaces():
    return fixture_fans(SURFACES)


@pytest.fixture(scope="session")
def threefolds():
    return fixture_fans(THREEFOLDS)


@pytest.fixture(scope="session")
def fourfolds():
    return fixture_fans(FOURFOLDS)


@pytest.fixture(scope="session")
def all_fans(surfaces, threefolds, fourfolds):
    return {**surfaces, **threefolds, **fourfolds}


@pytest.fixture(scope="session")
def p2(surfaces):
    return surfaces["P2"]


@pytest.fixture(scope="session")
def p1p1(surfaces):
    return surfaces["P1xP1"]


@pytest.fixture(scope="session")
def p3(threefolds):
    return threefolds["P3"]


@pytest.fixture(scope="session")
def p4(fourfolds):
    return fourfolds["P4"]


@pytest.fixture(scope="session")
def p1():
    return normal_fan(LatticePolytope([(-1,), (1,)]))


# One line per acceptance criterion, echoed at the end of the run.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
