import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

THETA_GRID = [2 * math.pi * k / 200 for k in range(1, 201)]
SPOT_THETAS = [math.pi / 3, math.pi / 2, math.pi, 3 * math.pi / 2]

BELL = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
BELL_PROJECTOR = np.outer(BELL, BELL.conj())


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def theta_grid():
    return list(THETA_GRID)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
