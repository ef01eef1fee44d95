"""Test suite for key API endpoints."""

from tests.conftest import load_json


def test_root_redirects_to_docs(client):
    """Test GET / redirects to the docs."""
    response = client.get("/", follow_redirects=False)
    assert response.status_code in (302, 307)
    assert response.headers["location"] == "/docs"


def test_check(client):
    """Test GET /check."""
    response = client.get("/check", params={"m": 2, "n_max": 2})
    assert response.status_code == 200
    data = response.json()
    assert data["passed"]
    assert data["rank_mode"] == "eval"
    assert "wall_iff_commuting" in data["checks"]


def test_check_rejects_large_alphabet(client):
    """Test GET /check with m out of range."""
    response = client.get("/check", params={"m": 9})
    assert response.status_code == 422


def test_kernel(client):
    """Test GET /kernel."""
    response = client.get("/kernel", params={"m": 2, "n_max": 3, "decompositions": False})
    assert response.status_code == 200
    data = response.json()
    assert [r["M"] for r in data["records"]] == [1, 0, 3, 2]
    assert all(r["decomposition"] == [] for r in data["records"])
    assert data["generators"] is True


def test_decompose(client):
    """Test GET /decompose."""
    response = client.get("/decompose", params={"m": 2, "n": 3, "rank_mode": "exact"})
    assert response.status_code == 200
    data = response.json()
    assert [p["dim"] for p in data["parts"]] == [2, 6, 0, 0]
    assert data["dims_sum"] == 8
    assert data["direct_sum_ok"]


def test_homology_zero_module(client):
    """Test POST /homology with the zero action."""
    response = client.post("/homology", params={"n_max": 3}, json=load_json("zero_l1_m2.json"))
    assert response.status_code == 200
    data = response.json()
    assert [r["dim_H"] for r in data["records"]] == [1, 2, 4, 8]
    assert data["finite_part"] == [1, 2, 1]


def test_homology_free_module(client):
    """Test POST /homology with a truncated free module."""
    body = {"kind": "free", "m": 2, "max_total_degree": 3}
    response = client.post("/homology", params={"n_max": 3}, json=body)
    assert response.status_code == 200
    assert response.json()["passed"]


def test_homology_rejects_noncommuting(client):
    """Test POST /homology with a module failing the wall condition."""
    response = client.post("/homology", json=load_json("noncommuting_l2_m2.json"))
    assert response.status_code == 422
    assert "A_1 and A_2" in response.json()["detail"]


def test_homology_rejects_malformed_body(client):
    """Test POST /homology with the wrong number of matrices."""
    response = client.post("/homology", json={"kind": "finite", "l": 1, "m": 2, "A": [[[0]]]})
    assert response.status_code == 422
    assert isinstance(response.json()["detail"], list)


def test_homology_rejects_bad_entry(client):
    """Test POST /homology with an unparsable entry."""
    response = client.post("/homology", json={"kind": "finite", "l": 1, "m": 2, "A": [[["y +"]], [[0]]]})
    assert response.status_code == 400


def test_koszul(client):
    """Test POST /koszul."""
    response = client.post("/koszul", json=load_json("commuting_l3_m3.json"))
    assert response.status_code == 200
    data = response.json()
    assert data["passed"]
    assert data["delta_exact"] == {}


def test_routers_registered_with_tags(client):
    """Test every router is mounted under its own prefix and tag."""
    paths = client.get("/openapi.json").json()["paths"]
    expected = {"/check": "check", "/decompose": "kernel", "/kernel": "kernel",
                "/homology": "homology", "/koszul": "homology"}
    for path, tag in expected.items():
        ops = paths[path]
        assert all(tag in op["tags"] for op in ops.values())


def test_decompose_carries_bases(client):
    """Test GET /decompose returns a basis payload for each part."""
    response = client.get("/decompose", params={"m": 2, "n": 3})
    parts = response.json()["parts"]
    assert all(p["basis"]["ambient_dim"] == 8 for p in parts)
    assert [len(p["basis"]["basis"]["entries"]) > 0 for p in parts] == [True, True, False, False]
