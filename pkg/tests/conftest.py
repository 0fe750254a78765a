import pytest
from hypothesis import HealthCheck, settings

from resinterp import Ring, Subscheme, parse_poly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
EX2_POINTS = [(0, 0), (1, 0), (0, 1), (0, 2)]
EX2_GENS = ["z1*(z1-1)", "z1*z2", "z2*(z2-1)*(z2-2)"]


@pytest.fixture
def R2():
    return Ring(("z1", "z2"))


@pytest.fixture
def R1():
    return Ring(("z",))


@pytest.fixture
def square(R2):
    return Subscheme.from_points(R2, SQUARE)


@pytest.fixture
def ex2(R2):
    return Subscheme.from_generators([parse_poly(s, R2) for s in EX2_GENS])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
