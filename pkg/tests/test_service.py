import json

import pytest
from fastapi.testclient import TestClient

from bertmatch import ENGINE_VERSION
from bertmatch.service.app import create_app
from bertmatch.service.config import ServiceConfig
from conftest import FIXTURES

GOLDEN = FIXTURES / "golden_score_response.json"

RESPONSE_KEY_ORDER = [
    "precision",
    "recall",
    "f1",
    "reference_tokens",
    "candidate_tokens",
    "recall_matches",
    "precision_matches",
    "unmatched_reference",
    "unmatched_candidate",
    "provider_id",
    "engine_version",
]


@pytest.fixture(scope="module")
def client(vocab_path_module):
    app = create_app(ServiceConfig(vocab_path=str(vocab_path_module)))
    with TestClient(app) as c:
        yield c


@pytest.fixture(scope="module")
def vocab_path_module():
    return FIXTURES / "vocab.txt"


def post_score(client, **body):
    return client.post("/score", json=body)


class TestScoreEndpoint:
    def test_golden_response_bytes(self, client):
        response = post_score(
            client, reference="the cat sat on the mat", candidate="a cat sat on a mat"
        )
        assert response.status_code == 200
        assert response.content == GOLDEN.read_bytes()

    def test_content_type(self, client):
        response = post_score(client, reference="cat", candidate="cat")
        assert response.headers["content-type"] == "application/json"

    def test_key_order_is_stable(self, client):
        response = post_score(client, reference="cat", candidate="dog")
        assert list(json.loads(response.content).keys()) == RESPONSE_KEY_ORDER

    def test_engine_version_matches_package(self, client):
        payload = json.loads(post_score(client, reference="cat", candidate="cat").content)
        assert payload["engine_version"] == ENGINE_VERSION

    def test_repeat_requests_identical(self, client):
        first = post_score(client, reference="hello world", candidate="hello there")
        second = post_score(client, reference="hello world", candidate="hello there")
        assert first.content == second.content

    def test_interleaved_requests_do_not_leak_state(self, client):
        a1 = post_score(client, reference="hello world", candidate="hello")
        b1 = post_score(client, reference="the cat", candidate="a dog")
        a2 = post_score(client, reference="hello world", candidate="hello")
        b2 = post_score(client, reference="the cat", candidate="a dog")
        assert a1.content == a2.content
        assert b1.content == b2.content

    def test_match_indices_reference_scoring_lists(self, client):
        payload = json.loads(
            post_score(client, reference="the cat sat", candidate="a cat").content
        )
        n_ref = sum(not t["is_special"] for t in payload["reference_tokens"])
        n_cand = sum(not t["is_special"] for t in payload["candidate_tokens"])
        assert len(payload["recall_matches"]) == n_ref
        assert len(payload["precision_matches"]) == n_cand
        for match in payload["recall_matches"]:
            assert 0 <= match["source"] < n_ref
            assert 0 <= match["target"] < n_cand

    def test_token_payload_shape(self, client):
        payload = json.loads(
            post_score(client, reference="unaffable", candidate="unaffable").content
        )
        token = payload["reference_tokens"][0]
        assert list(token.keys()) == ["surface", "char_span", "is_special", "is_subword"]
        assert payload["reference_tokens"][2]["is_subword"] is True

    def test_truncate_option(self, client):
        long_text = " ".join(["cat"] * 600)
        blocked = post_score(client, reference=long_text, candidate="cat")
        assert blocked.status_code == 422
        assert blocked.json()["error_code"] == "SEQUENCE_TOO_LONG"
        allowed = post_score(
            client, reference=long_text, candidate="cat", options={"truncate": True}
        )
        assert allowed.status_code == 200

    def test_seed_override_changes_provider_id(self, client):
        base = json.loads(post_score(client, reference="cat", candidate="dog").content)
        seeded = json.loads(
            post_score(client, reference="cat", candidate="dog", options={"seed": 5}).content
        )
        assert base["provider_id"] == "deterministic_test:dim=8:seed=0:contextual=false"
        assert seeded["provider_id"] == "deterministic_test:dim=8:seed=5:contextual=false"
        assert base["recall"] != seeded["recall"]

    def test_contextual_override(self, client):
        payload = json.loads(
            post_score(
                client, reference="cat cat", candidate="cat", options={"contextual": True}
            ).content
        )
        assert payload["provider_id"].endswith("contextual=true")
        # The two identical reference words sit at different positions, so
        # only one of them matches the lone candidate word perfectly.
        assert payload["recall"] < 1.0

    def test_explicit_test_provider_accepted(self, client):
        response = post_score(
            client, reference="cat", candidate="cat", options={"provider": "test"}
        )
        assert response.status_code == 200


class TestErrorTaxonomy:
    def test_malformed_json_is_bad_request(self, client):
        response = client.post(
            "/score", content=b"{not json", headers={"content-type": "application/json"}
        )
        assert response.status_code == 400
        assert response.json()["error_code"] == "BAD_REQUEST"

    def test_missing_field_is_bad_request(self, client):
        response = post_score(client, reference="only one side")
        assert response.status_code == 400
        assert response.json()["error_code"] == "BAD_REQUEST"

    def test_wrong_type_is_bad_request(self, client):
        response = post_score(client, reference=5, candidate="x")
        assert response.status_code == 400
        body = response.json()
        assert body["error_code"] == "BAD_REQUEST"
        assert "reference" in body["message"]

    def test_empty_input(self, client):
        response = post_score(client, reference="", candidate="cat")
        assert response.status_code == 422
        assert response.json()["error_code"] == "EMPTY_INPUT"

    def test_whitespace_only_is_empty(self, client):
        response = post_score(client, reference="cat", candidate="   ")
        assert response.status_code == 422
        assert response.json()["error_code"] == "EMPTY_INPUT"

    def test_sequence_too_long(self, client):
        response = post_score(client, reference=" ".join(["cat"] * 600), candidate="cat")
        assert response.status_code == 422
        assert response.json()["error_code"] == "SEQUENCE_TOO_LONG"

    def test_model_provider_unavailable(self, client):
        response = post_score(
            client, reference="cat", candidate="cat", options={"provider": "model"}
        )
        assert response.status_code == 503
        assert response.json()["error_code"] == "PROVIDER_UNAVAILABLE"

    def test_model_provider_with_test_knobs_is_bad_request(self, client):
        response = post_score(
            client,
            reference="cat",
            candidate="cat",
            options={"provider": "model", "seed": 3},
        )
        assert response.status_code == 400
        assert response.json()["error_code"] == "BAD_REQUEST"

    def test_unknown_provider_is_bad_request(self, client):
        response = post_score(
            client, reference="cat", candidate="cat", options={"provider": "nonsense"}
        )
        assert response.status_code == 400

    def test_error_body_shape(self, client):
        response = post_score(client, reference="", candidate="cat")
        assert sorted(response.json().keys()) == ["error_code", "message"]


class TestHealth:
    def test_health_reports_provider(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["provider_id"].startswith("deterministic_test:")


class TestAppConstruction:
    def test_requires_vocab_path(self):
        with pytest.raises(ValueError):
            create_app(ServiceConfig())

    def test_missing_vocab_file_fails_fast(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            create_app(ServiceConfig(vocab_path=str(tmp_path / "absent.txt")))

    def test_process_dim_respected(self):
        app = create_app(ServiceConfig(vocab_path=str(FIXTURES / "vocab.txt"), dim=12))
        with TestClient(app) as client:
            payload = json.loads(
                client.post("/score", json={"reference": "cat", "candidate": "cat"}).content
            )
            assert payload["provider_id"] == "deterministic_test:dim=12:seed=0:contextual=false"

    def test_cors_header_when_configured(self):
        config = ServiceConfig(vocab_path=str(FIXTURES / "vocab.txt"), cors_origin="*")
        with TestClient(create_app(config)) as client:
            response = client.post(
                "/score",
                json={"reference": "cat", "candidate": "cat"},
                headers={"origin": "http://example.test"},
            )
            assert response.headers.get("access-control-allow-origin") == "*"

    def test_no_cors_header_by_default(self, client):
        response = client.post(
            "/score",
            json={"reference": "cat", "candidate": "cat"},
            headers={"origin": "http://example.test"},
        )
        assert "access-control-allow-origin" not in response.headers


class TestEnvConfig:
    def test_from_env_reads_overrides(self, monkeypatch):
        monkeypatch.setenv("BERTMATCH_HOST", "0.0.0.0")
        monkeypatch.setenv("BERTMATCH_PORT", "9100")
        monkeypatch.setenv("BERTMATCH_DIM", "16")
        monkeypatch.setenv("BERTMATCH_SEED", "42")
        monkeypatch.setenv("BERTMATCH_CONTEXTUAL", "true")
        monkeypatch.setenv("BERTMATCH_VOCAB_PATH", "/tmp/v.txt")
        config = ServiceConfig.from_env()
        assert config.host == "0.0.0.0"
        assert config.port == 9100
        assert config.dim == 16
        assert config.seed == 42
        assert config.contextual is True
        assert config.vocab_path == "/tmp/v.txt"

    def test_defaults_without_env(self):
        config = ServiceConfig.from_env(env={})
        assert config.host == "127.0.0.1"
        assert config.port == 8000
        assert config.provider == "test"
        assert config.dim == 8
