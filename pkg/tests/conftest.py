import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance: end-to-end acceptance criteria (long-running)")
