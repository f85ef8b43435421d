import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from lie.rootsys import build_from_label  # noqa: E402


def pytest_configure(config):
    # tests run against the default guards whatever the calling shell exports
    for key in list(os.environ):
        if key.startswith("RHO_TENSOR_"):
            del os.environ[key]


@pytest.fixture
def a1():
    return build_from_label("A1")


@pytest.fixture
def a2():
    return build_from_label("A2")


@pytest.fixture
def b2():
    return build_from_label("B2")


@pytest.fixture
def c2():
    return build_from_label("C2")


@pytest.fixture
def g2():
    return build_from_label("G2")
