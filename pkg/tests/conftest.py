import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dimers import dualize, load_fixture

FIXTURES = ["square4", "conifold", "octo8", "hex7"]
CONSISTENT = FIXTURES


@pytest.fixture(params=FIXTURES)
def fixture(request):
    return load_fixture(request.param)


@pytest.fixture(scope="session")
def models():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def quivers(models):
    return {name: dualize(fx.graph) for name, fx in models.items()}
