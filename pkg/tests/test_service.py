"""HTTP API contract: snapshots, error bodies, endpoint behavior."""

import pytest
from fastapi.testclient import TestClient

from lukaq.dataset import bundled_spec, bundled_table
from lukaq.service import DatasetState, create_app


@pytest.fixture
def client():
    state = DatasetState()
    state.load(bundled_table(), bundled_spec())
    return TestClient(create_app(state))


@pytest.fixture
def empty_client():
    return TestClient(create_app(DatasetState()))


class TestSchema:
    def test_bound_variables_present(self, client):
        body = client.get("/schema").json()
        assert body["version"] == 1
        variables = [c["variable"] for c in body["columns"] if "variable" in c]
        assert variables == [f"X{i}" for i in range(15)]

    def test_extrema_exact_strings(self, client):
        body = client.get("/schema").json()
        by_name = {c["name"]: c for c in body["columns"]}
        assert by_name["max_speed"]["max"] == "350"
        assert by_name["acceleration_0_100"]["normalization"] == {
            "min": 4.0, "max": 12.8, "reversed": True,
        }

    def test_no_dataset_gives_503(self, empty_client):
        response = empty_client.get("/schema")
        assert response.status_code == 503
        assert response.json()["code"] == "internal"


class TestNormalization:
    def put_full_spec(self, client, **overrides):
        body = client.get("/schema").json()
        spec = {
            c["name"]: dict(c["normalization"])
            for c in body["columns"]
            if "normalization" in c
        }
        for name, entry in overrides.items():
            spec[name] = entry
        return client.put("/normalization", json=spec)

    def test_version_bumps_and_degrees_change(self, client):
        before = client.post("/query", json={"formula": "X10"}).json()
        response = self.put_full_spec(
            client, max_speed={"min": 140, "max": 250, "reversed": False}
        )
        assert response.status_code == 200
        assert response.json()["version"] == 2
        after = client.post("/query", json={"formula": "X10"}).json()
        assert after["version"] == 2
        # raw 250+ now saturates at degree 1
        fast = [e for e in after["entries"] if e["degree_exact"] == "1"]
        assert fast
        assert before["entries"] != after["entries"]

    def test_idempotent_reput_new_version_same_degrees(self, client):
        first = self.put_full_spec(client).json()
        query_1 = client.post("/query", json={"formula": "X11^2"}).json()
        second = self.put_full_spec(client).json()
        query_2 = client.post("/query", json={"formula": "X11^2"}).json()
        assert second["version"] == first["version"] + 1
        assert [e["degree_exact"] for e in query_1["entries"]] == [
            e["degree_exact"] for e in query_2["entries"]
        ]

    def test_min_not_below_max_rejected(self, client):
        response = self.put_full_spec(
            client, price={"min": 90000, "max": 10000, "reversed": False}
        )
        assert response.status_code == 422
        assert response.json()["code"] == "invalid_spec"

    def test_unknown_column_rejected(self, client):
        response = self.put_full_spec(client, bogus={"min": 0, "max": 1})
        assert response.status_code == 422

    def test_incomplete_spec_rejected(self, client):
        response = client.put(
            "/normalization", json={"price": {"min": 0, "max": 1, "reversed": False}}
        )
        assert response.status_code == 422


class TestQuery:
    def test_ranked_entries(self, client):
        response = client.post(
            "/query",
            json={"formula": "2*(X11^2 and (!X12) and (!X0)^3 and (!X6)^2)", "limit": 6},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["version"] == 1
        assert len(body["entries"]) == 6
        top = body["entries"][0]
        assert top["id"] == 21
        assert top["degree"] == "1.000"
        assert top["degree_exact"] == "1"
        assert top["display"]["manufacturer"]

    def test_three_decimal_rounding(self, client):
        body = client.post("/query", json={"formula": "X11^8 and (!X12)^4"}).json()
        by_id = {e["id"]: e for e in body["entries"]}
        assert by_id[3]["degree"] == "0.250"
        assert by_id[3]["degree_exact"] == "1/4"

    def test_unknown_variable_422(self, client):
        response = client.post("/query", json={"formula": "X99"})
        assert response.status_code == 422
        assert response.json()["code"] == "unbound_variable"

    def test_syntax_error_400_with_span(self, client):
        response = client.post("/query", json={"formula": "X11 and"})
        assert response.status_code == 400
        body = response.json()
        assert body["code"] == "syntax_error"
        assert body["span"] == {"start": 7, "end": 7}

    def test_only_positive(self, client):
        body = client.post(
            "/query", json={"formula": "X11^8", "only_positive": True}
        ).json()
        assert body["entries"]
        assert all(e["degree_exact"] != "0" for e in body["entries"])

    def test_snapshot_isolation_version_tagging(self, client):
        v1 = client.post("/query", json={"formula": "X0"}).json()["version"]
        TestNormalization().put_full_spec(client)
        v2 = client.post("/query", json={"formula": "X0"}).json()["version"]
        assert (v1, v2) == (1, 2)


class TestTranspile:
    def test_walkthrough_golden(self, client):
        response = client.post(
            "/transpile",
            json={
                "formula": "X1 and (X5 or X7)",
                "table": "auto",
                "projected": ["id", "trim", "length", "seats", "horsepower"],
                "order": False,
            },
        )
        assert response.status_code == 200
        assert response.json()["sql"] == (
            "SELECT id, trim, length, seats, horsepower, "
            "least(length,greatest(seats,horsepower)) As Results FROM auto;"
        )

    def test_syntax_error(self, client):
        response = client.post("/transpile", json={"formula": "(", "table": "t"})
        assert response.status_code == 400

    def test_unknown_variable(self, client):
        response = client.post("/transpile", json={"formula": "X99", "table": "t"})
        assert response.status_code == 422


class TestSynthLiteral:
    def test_interval_mode(self, client):
        response = client.post("/synth-literal", json={"q1": 0.3, "q2": 0.5})
        assert response.status_code == 200
        body = response.json()
        assert body["literal"] == "(2*X)^2^2"
        assert body["steps"] == [
            {"op": "sum", "k": 2}, {"op": "prod", "k": 2}, {"op": "prod", "k": 2},
        ]

    def test_delta_mode_identity(self, client):
        # every normalized acceleration degree is >= 0.2, so nothing to discard
        response = client.post("/synth-literal", json={"delta": 0.1, "variable": "X11"})
        assert response.status_code == 200
        assert response.json() == {"literal": "X11", "steps": []}

    def test_delta_mode_synthesizes(self, client):
        response = client.post("/synth-literal", json={"delta": 0.875, "variable": "X11"})
        assert response.status_code == 200
        assert response.json()["steps"]

    def test_degenerate_interval_422(self, client):
        response = client.post("/synth-literal", json={"q1": 0.5, "q2": 0.5})
        assert response.status_code == 422
        assert response.json()["code"] == "invalid_spec"

    def test_unknown_variable_delta_mode(self, client):
        response = client.post("/synth-literal", json={"delta": 0.5, "variable": "Q7"})
        assert response.status_code == 422


class TestErrorShape:
    def test_error_bodies_are_machine_readable(self, client):
        cases = [
            client.post("/query", json={"formula": "(("}),
            client.post("/query", json={"formula": "X99"}),
            client.put("/normalization", json={"price": {"min": 1, "max": 0}}),
        ]
        for response in cases:
            body = response.json()
            assert body["code"] in {
                "syntax_error", "unbound_variable", "invalid_spec", "unknown_row", "internal",
            }
            assert body["message"]
            assert ("span" in body) == (body["code"] == "syntax_error")
