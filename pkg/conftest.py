"""
Pytest configuration for selfdual_codes_lib tests.
Keeps SELFDUAL_* overrides from the calling shell out of the test session.
"""
import os
import random
from unittest.mock import patch

import pytest

from selfdual_codes_lib.gf import make_field


@pytest.fixture(scope="session", autouse=True)
def setup_test_environment():
    """Run every test against the library defaults."""
    clean = {k: v for k, v in os.environ.items() if not k.startswith("SELFDUAL_")}
    with patch.dict(os.environ, clean, clear=True):
        yield


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def f2():
    return make_field(2, 1)


@pytest.fixture
def f3():
    return make_field(3, 1)


@pytest.fixture
def f5():
    return make_field(5, 1)


@pytest.fixture
def f9():
    return make_field(3, 2)


@pytest.fixture
def catalog_path(tmp_path):
    return tmp_path / "catalog.jsonl"
