from fastapi.testclient import TestClient

from antimagic.service import app

client = TestClient(app)

C4 = "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_construct_and_verify():
    r = client.post("/construct", json={"graph": C4})
    assert r.status_code == 200
    body = r.json()
    assert sorted(body["sums"]) == sorted({-7, 6, -3, 4})
    r2 = client.post("/verify", json={"graph": C4, "certificate": body["certificate"]})
    assert r2.json() == {"ok": True, "collision": None}


def test_construct_rejected():
    k3 = "3 3\n0 1\n0 2\n1 2\n"
    r = client.post("/construct", json={"graph": k3, "strategy": "matching"})
    assert r.status_code == 409


def test_bad_graph_text():
    r = client.post("/construct", json={"graph": "not a graph"})
    assert r.status_code == 422


def test_verify_collision_reported():
    cert = "0 1 1\n2 0 2\n1 2 3\n"
    r = client.post("/verify", json={"graph": "3 3\n0 1\n0 2\n1 2\n",
                                     "certificate": cert})
    assert r.json()["ok"] is False
    assert r.json()["collision"] == [0, 2]


def test_oracle():
    r = client.post("/oracle", json={"graph": "2 1\n0 1\n"})
    assert r.json()["exists"] is True
    assert r.json()["certificate"]


def test_generate_and_batch():
    r = client.post("/generate", json={"family": "cycle", "params": {"n": 5}})
    assert r.json()["graph"].startswith("5 5\n")
    r = client.post("/batch", json={
        "family": "biregular",
        "params": {"a": 3, "b": 3, "left": 4, "right": 4},
        "count": 2, "strategy": "matching",
    })
    body = r.json()
    assert body["passed"] == 2 and body["total"] == 2
