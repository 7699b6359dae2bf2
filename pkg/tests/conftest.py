from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from bicycl import specfile
from bicycl.gf import FieldTower

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")


def read_h_table(name):
    out = {}
    for line in (DATA / name).read_text().splitlines():
        k, l, digits = line.split()
        out[int(k), int(l)] = [int(c) for c in digits]
    return out


def read_grid(name):
    return np.asarray([[int(v) for v in line.split()]
                       for line in (DATA / name).read_text().splitlines() if line.strip()])


@pytest.fixture(scope="session")
def f81a():
    return FieldTower.from_preset("F81-a")


@pytest.fixture(scope="session")
def f81b():
    return FieldTower.from_preset("F81-b")


@pytest.fixture(scope="session")
def f4():
    return FieldTower.default(2, 2, 3)


_codes = {}


def load_code(name):
    if name not in _codes:
        spec = specfile.load_spec(name)
        _codes[name] = (spec, spec.build())
    return _codes[name]


@pytest.fixture(scope="session")
def ecz3():
    return load_code("10x8-ecz3")


@pytest.fixture(scope="session")
def cc45():
    return load_code("4x5-constacyclic")


@pytest.fixture(scope="session")
def cyc45():
    return load_code("4x5-cyclic")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
