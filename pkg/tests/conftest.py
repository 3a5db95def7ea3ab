import sys

import numpy as np
import pytest

from eqcenters import Simplex

SQRT3 = np.sqrt(3.0)


@pytest.fixture
def equilateral():
    return Simplex([(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2)])


@pytest.fixture
def isosceles():
    return Simplex([(-1.0, 0.0), (1.0, 0.0), (0.0, 2.0)])


@pytest.fixture
def scalene():
    # sides 3, 4, 5
    return Simplex([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)])


@pytest.fixture
def regular_tetrahedron():
    return Simplex([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


@pytest.fixture
def iso_tet():
    return Simplex([(1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)])


@pytest.fixture
def double_point():
    return Simplex([(0.0, 0.0), (0.0, 0.0), (3.0, 0.0)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
