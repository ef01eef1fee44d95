import json

import pytest
from fastapi.testclient import TestClient

from main import app
from ybhomology.homology.modules import finite_module, free_module
from ybhomology.paths import MODULES_DIR
from ybhomology.tensor.elimination import use_rank_mode
from ybhomology.ybop import build_R


def load_json(name):
    return json.loads((MODULES_DIR / name).read_text())


@pytest.fixture(scope="session")
def yb1():
    return build_R(1)


@pytest.fixture(scope="session")
def yb2():
    """R_2 with its operator cache shared across the session."""
    return build_R(2)


@pytest.fixture(scope="session")
def yb3():
    return build_R(3)


@pytest.fixture
def commuting_module():
    """The commuting l=3, m=3 module whose homology is 3^n."""
    data = load_json("commuting_l3_m3.json")
    return finite_module(data["A"], name=data["name"])


@pytest.fixture
def zero_module():
    return finite_module([[[0]], [[0]]], name="zero action")


@pytest.fixture
def identity_module():
    return finite_module([[[1]], [[1]]], name="identity action")


@pytest.fixture
def free_m2():
    return free_module(2, max_total_degree=4)


@pytest.fixture
def exact_mode():
    with use_rank_mode("exact"):
        yield


@pytest.fixture(scope="function")
def client():
    """A test client for the FastAPI app."""
    yield TestClient(app)
