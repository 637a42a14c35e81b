import os

import pytest

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name + ".json")


@pytest.fixture
def fixdir():
    return FIXTURE_DIR
