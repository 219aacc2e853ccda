"""HTTP service endpoints."""

import pytest
from starlette.testclient import TestClient

from blockalg.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestInfo:
    def test_root(self, client):
        data = client.get("/").json()
        assert data["name"] == "blockalg"
        assert "duality" in data["suites"]


class TestDecompose:
    def test_reference_examples(self, client):
        data = client.post("/decompose", json={"word": "01001011"}).json()
        assert data["tuple_repr"] == "(0; 3,4,1)"
        assert data["block_degree"] == 2
        assert data["blocks"] == ["010", "0101", "1"]
        data = client.post("/decompose", json={"word": "110101100"}).json()
        assert data["tuple_repr"] == "(1; 1,5,2,1)"

    def test_invalid_character_names_position(self, client):
        resp = client.post("/decompose", json={"word": "01a01"})
        assert resp.status_code == 422
        assert "position 3" in str(resp.json())

    def test_empty_word_rejected(self, client):
        assert client.post("/decompose", json={"word": ""}).status_code == 422


class TestPibl:
    def test_roundtrip(self, client):
        out = client.post("/pibl", json={"word": "100"}).json()
        assert out["monomial"] == "x1^3*x2^2"
        back = client.post("/pibl/invert", json={"monomial": out["monomial"]}).json()
        assert back["word"] == "100"

    def test_invalid_monomial(self, client):
        resp = client.post("/pibl/invert", json={"monomial": "x1^3"})
        assert resp.status_code == 422

    def test_malformed_monomial_names_position(self, client):
        resp = client.post("/pibl/invert", json={"monomial": "x1^3*zz"})
        assert resp.status_code == 422
        assert "position" in resp.json()["detail"]


class TestGenerator:
    def test_reduced_form(self, client):
        data = client.post("/generator", json={"weight": 3, "reduced": True}).json()
        assert data["polynomial"] == {
            "vars": 2,
            "terms": [
                {"coeff": "-2", "exps": [0, 2]},
                {"coeff": "-3", "exps": [1, 1]},
                {"coeff": "-2", "exps": [2, 0]},
            ],
        }

    def test_even_weight_rejected(self, client):
        assert client.post("/generator", json={"weight": 4}).status_code == 422

    def test_conflicting_forms_rejected(self, client):
        resp = client.post("/generator", json={"weight": 3, "reduced": True, "as_q": True})
        assert resp.status_code == 422


class TestBracket:
    def test_pair(self, client):
        data = client.post("/bracket", json={"weights": [3, 5]}).json()
        assert data["weight"] == 8
        assert data["block_degree"] == 2
        assert data["polynomial"]["vars"] == 3

    def test_self_bracket_is_zero(self, client):
        data = client.post("/bracket", json={"weights": [3, 3]}).json()
        assert data["polynomial"]["terms"] == []
        assert data["rendered"] == "0"

    def test_bad_weights(self, client):
        assert client.post("/bracket", json={"weights": [3, 4]}).status_code == 422


class TestCoaction:
    def test_single_term(self, client):
        data = client.post("/coaction", json={"word": "101", "r": 1}).json()
        assert data["count"] == 1
        assert data["terms"][0] == {"coeff": "1", "left": "I(0;101;1)", "right": "I(0;1)"}

    def test_weight_too_small(self, client):
        assert client.post("/coaction", json={"word": "1", "r": 1}).status_code == 422


class TestDims:
    def test_table(self, client):
        data = client.get("/dims", params={"max_weight": 9, "max_block_degree": 3}).json()
        lyndon = {(c["weight"], c["block_degree"]): c["dimension"] for c in data["lyndon"]}
        assert lyndon[(8, 2)] == 1
        assert (9, 3) not in lyndon  # zero cells are omitted
        hoffman = {(c["weight"], c["level"]): c["count"] for c in data["hoffman"]}
        assert hoffman[(8, 0)] == 1
        assert hoffman[(7, 1)] == 3


class TestVerifyEndpoint:
    def test_single_suite(self, client):
        resp = client.post(
            "/verify",
            json={"suites": ["parity_endpoint"], "max_weight": 8},
        )
        data = resp.json()
        assert data["all_pass"] is True
        assert len(data["reports"]) == 1
        assert data["reports"][0]["relation_name"] == "parity_endpoint"
        assert data["config"]["max_weight"] == 8
        assert "version" in data

    def test_unknown_suite(self, client):
        resp = client.post("/verify", json={"suites": ["nope"]})
        assert resp.status_code == 422

    def test_excessive_bounds_reported(self, client):
        resp = client.post("/verify", json={"suites": ["duality"], "max_weight": 40})
        assert resp.status_code == 422
        assert "resource limits" in resp.json()["detail"]
