import random

import pytest

from chempolytope.core import OrderSize


def general_pairs(max_n: int, min_n: int = 3):
    return [ns for ns in OrderSize.all_valid(max_n, min_n) if ns.in_general_regime()]


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
