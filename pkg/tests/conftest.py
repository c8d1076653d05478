import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from eislat.eisenstein import EisInt

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def eis(bound=20):
    return st.builds(EisInt, st.integers(-bound, bound), st.integers(-bound, bound))


def nonzero_eis(bound=20):
    return eis(bound).filter(bool)


def eis_vec(n, bound=5):
    return st.tuples(*[eis(bound)] * n)


def eis_matrix(m, n, bound=5):
    return st.tuples(*[eis_vec(n, bound)] * m)


@pytest.fixture
def rng():
    return random.Random(1234)


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
