import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ppalg.cli import main as cli_main
from ppalg.service import SESSION_CAP, create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def test_create_a2(client):
    res = client.post("/session", json={"type": "A2"})
    assert res.status_code == 200
    s = res.json()
    assert s["r"] == 3 and s["n"] == 2
    assert len(s["nodes"]) == 3
    assert len(s["edges"]) == 3
    assert s["exchangeable"] == [1]
    assert s["cluster_variables"] == ["x1", "x2", "x3"]
    assert s["history"] == []
    assert [n["label"] for n in s["nodes"]] == ["(1)", "(1 / 2)", "(2 / 1)"]


def test_create_a3_quiver_counts(client):
    s = client.post("/session", json={"type": "A3"}).json()
    assert len(s["nodes"]) == 6
    assert len(s["edges"]) == 9
    assert all(e["mult"] == 1 for e in s["edges"])
    assert s["exchangeable"] == [1, 2, 3]
    assert sum(n["projective"] for n in s["nodes"]) == 3


def test_create_errors(client):
    assert client.post("/session", json={"type": "D4"}).status_code == 400
    assert client.post("/session", json={"type": "Q9"}).status_code == 400
    assert client.post("/session", json={}).status_code == 422


def test_unknown_session(client):
    assert client.get("/session/feedbeef").status_code == 404
    assert client.post("/session/feedbeef/mutate",
                       json={"k": 1}).status_code == 404


def test_mutate_roundtrip(client):
    s = client.post("/session", json={"type": "A2"}).json()
    sid, h0 = s["session"], s["state_hash"]
    res = client.post(f"/session/{sid}/mutate", json={"k": 1})
    assert res.status_code == 200
    s1 = res.json()
    assert s1["nodes"][0]["label"] == "(2)"
    assert s1["sequence"]["display"] == "0 -> (1) -> (2 / 1) -> (2) -> 0"
    assert s1["cluster_variables"][0] == "(x2 + x3)/x1"
    assert len(s1["history"]) == 1 and s1["state_hash"] != h0
    s2 = client.post(f"/session/{sid}/mutate", json={"k": 1}).json()
    assert s2["nodes"][0]["label"] == "(1)"
    assert [h["k"] for h in s2["history"]] == [1, 1]
    fresh = client.post("/session", json={"type": "A2"}).json()
    assert s2["state_hash"] != h0  # history differs even if slots agree
    assert [n["id"] for n in s2["nodes"]] == [n["id"] for n in
                                              fresh["nodes"]]


def test_mutate_rejections(client):
    sid = client.post("/session", json={"type": "A3"}).json()["session"]
    res = client.post(f"/session/{sid}/mutate", json={"k": 5})
    assert res.status_code == 409
    assert "projective" in res.json()["detail"]
    assert client.post(f"/session/{sid}/mutate",
                       json={"k": 99}).status_code == 409
    assert client.post(f"/session/{sid}/mutate",
                       json={}).status_code == 422


def test_export_and_replay(client):
    sid = client.post("/session", json={"type": "A3"}).json()["session"]
    for k in (2, 1, 3, 2):
        assert client.post(f"/session/{sid}/mutate",
                           json={"k": k}).status_code == 200
    exp = client.get(f"/session/{sid}/export").json()
    assert exp["history"] == [2, 1, 3, 2]
    assert len(exp["sequences"]) == 4
    replay = client.post("/session", json={"type": "A3",
                                           "history": exp["history"]})
    assert replay.status_code == 200
    assert replay.json()["state_hash"] == exp["state_hash"]
    bad = client.post("/session", json={"type": "A3", "history": [4]})
    assert bad.status_code == 409


def test_sequences_match_cli(client):
    walk = [2, 1, 3, 1, 2]
    sid = client.post("/session", json={"type": "A3"}).json()["session"]
    displays = [client.post(f"/session/{sid}/mutate",
                            json={"k": k}).json()["sequence"]["display"]
                for k in walk]
    res = CliRunner().invoke(cli_main, [
        "mutate", "--type", "A3",
        "--sequence", ",".join(str(k) for k in walk)])
    assert res.exit_code == 0
    cli_lines = [line.split(": ", 1)[1]
                 for line in res.output.splitlines()
                 if line.startswith("mu_")]
    assert cli_lines == displays


def test_catalog_endpoint(client):
    res = client.get("/catalog/A2")
    assert res.status_code == 200
    assert len(res.json()["entries"]) == 4
    assert client.get("/catalog/D4").status_code == 400


def test_lru_eviction(client):
    first = client.post("/session", json={"type": "A2"}).json()["session"]
    for _ in range(SESSION_CAP):
        client.post("/session", json={"type": "A2"})
    assert client.get(f"/session/{first}").status_code == 404


def test_static_mount(tmp_path, monkeypatch):
    (tmp_path / "index.html").write_text("<html>explorer</html>")
    monkeypatch.setenv("PPALG_STATIC", str(tmp_path))
    c = TestClient(create_app())
    res = c.get("/")
    assert res.status_code == 200
    assert "explorer" in res.text
    assert c.post("/session", json={"type": "A2"}).status_code == 200


def test_static_mount_absent(tmp_path, monkeypatch):
    monkeypatch.setenv("PPALG_STATIC", str(tmp_path / "missing"))
    c = TestClient(create_app())
    assert c.get("/").status_code == 404
    assert c.post("/session", json={"type": "A2"}).status_code == 200
