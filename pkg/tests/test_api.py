import math

import pytest
from fastapi.testclient import TestClient

from app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestRoot:
    def test_root(self, client):
        body = client.get("/").json()
        assert body["status"] == "operational"
        assert body["profiles"] == 2
        assert body["suites"] >= 10

    def test_health(self, client):
        body = client.get("/api/health").json()
        assert body["status"] == "healthy"
        assert set(body["services"]) == {"solver", "ringing", "verify"}

    def test_default_profile(self, client):
        body = client.get("/api/profiles/odd_n3").json()
        assert body["id"] == "odd_n3"
        assert body["parity"] == "odd"
        assert client.get("/api/profiles/n5").status_code == 404


class TestSolver:
    def test_solve(self, client):
        resp = client.post("/api/solve", json={"t": "1/7", "grid_size": 16})
        assert resp.status_code == 200
        body = resp.json()
        assert body["t"] == "1/7"
        assert len(body["grid"]) == 16
        assert len(body["arcs"]) >= 2
        total = sum(a["end"] - a["start"] for a in body["arcs"])
        assert total == pytest.approx(1.0)
        assert body["l2_norm_sq"] == pytest.approx(2 / math.pi, abs=1e-10)

    def test_time_is_reduced(self, client):
        assert client.post("/api/solve", json={"t": "2/14"}).json()["t"] == "1/7"

    def test_decimal_time_rejected(self, client):
        assert client.post("/api/solve", json={"t": "0.25"}).status_code == 422

    @pytest.mark.parametrize("payload", [{"t": "1/7", "gamma": 0.7}, {"t": "1/7", "n": 1}, {"t": "8/7"}])
    def test_invalid_problem(self, client, payload):
        assert client.post("/api/solve", json=payload).status_code == 422

    def test_series(self, client):
        body = client.post("/api/series", json={"t": "0", "x": 0.0, "K": 0}).json()
        assert body["re"] == pytest.approx(2 / math.pi)
        assert body["im"] == pytest.approx(0.0)


class TestRinging:
    def test_catalog(self, client):
        body = client.get("/api/profiles").json()
        assert body["total"] == 6
        assert body["forms"] == ["even", "odd", "odd-weighted"]

    def test_table(self, client):
        resp = client.post("/api/ringing", json={"n": 3, "s_lo": -1, "s_hi": 1, "count": 3})
        assert resp.status_code == 200
        rows = resp.json()["rows"]
        assert [r["s"] for r in rows] == [-1.0, 0.0, 1.0]
        assert rows[1]["re"] == pytest.approx(1 / 3, abs=1e-9)

    def test_unknown_form(self, client):
        assert client.post("/api/ringing", json={"form": "cubic"}).status_code == 404

    def test_parity_mismatch(self, client):
        assert client.post("/api/ringing", json={"n": 2, "form": "odd", "count": 2}).status_code == 422


class TestApprox:
    def test_golden_mean(self, client):
        body = client.post("/api/approx", json={"t": "0.6180339887498949", "M": 4, "M_max": 50}).json()
        assert body["approximant"] == "5/8"
        assert body["in_B"] is not None

    def test_outside_unit_interval(self, client):
        assert client.post("/api/approx", json={"t": "3/2", "M": 4}).status_code == 422


class TestVerify:
    def test_list(self, client):
        assert "parseval" in client.get("/api/verify").json()["suites"]

    def test_run_suite(self, client):
        body = client.post("/api/verify/parseval", params={"seed": 3}).json()
        assert body["suite"] == "parseval"
        assert body["passed"]

    def test_unknown_suite(self, client):
        assert client.post("/api/verify/nope").status_code == 404
