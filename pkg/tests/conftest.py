import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ybe import corpus


@pytest.fixture(scope="session")
def e24():
    return corpus.e24()


@pytest.fixture(scope="session")
def s4():
    return corpus.s4()
