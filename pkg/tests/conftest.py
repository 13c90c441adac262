import numpy as np
import pytest

from curvewigner import Field, preset_bundle
from curvewigner.mubs import PRESETS

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf4():
    return Field(2)


@pytest.fixture(scope="session")
def gf8():
    return Field(3)


@pytest.fixture(scope="session")
def gf16():
    return Field(4)


@pytest.fixture(scope="session")
def bundles(gf8):
    return {name: preset_bundle(gf8, name) for name in PRESETS}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
