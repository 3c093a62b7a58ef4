import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hlevels import default_constants, derive


@pytest.fixture(scope="session")
def C():
    return default_constants()


@pytest.fixture(scope="session")
def D(C):
    return derive(C)
