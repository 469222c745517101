import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from latsig import keygen  # noqa: E402

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture(scope="session")
def keypair():
    return keygen(bytes(range(32)))


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
