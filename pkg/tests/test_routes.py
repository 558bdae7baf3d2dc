import json

import pytest

from supersat import create_app
from supersat.cli import run
from supersat.services import graph_core
from supersat.utils.graph_io import write_edge_list


def result_of(response, status=200):
    assert response.status_code == status, response.get_data(as_text=True)
    body = response.get_json()
    assert body["success"] is True
    return body["result"]


def test_construct(client):
    result = result_of(client.post("/api/graphs/construct", json={"family": "turan", "parameters": [6, 3]}))
    assert result["graph"]["m"] == 12
    assert result["partition"]["r"] == 3


def test_spectral_accepts_text_and_edge_lists(client):
    k4 = graph_core.build_clique(4).graph
    from_text = result_of(client.post("/api/graphs/spectral", json={"graph": write_edge_list(k4)}))
    from_edges = result_of(client.post("/api/graphs/spectral", json={"graph": k4.to_dict(), "vector": False}))
    assert from_text["spectral"]["rho"] == pytest.approx(3.0)
    assert "x" not in from_edges["spectral"]


def test_spectral_matches_the_cli(client, graph_file, capsys):
    petersen = graph_core.build_petersen().graph
    path = graph_file(petersen)
    assert run(["spectral", path]) == 0
    from_cli = json.loads(capsys.readouterr().out)
    from_http = result_of(client.post("/api/graphs/spectral", json={"graph": write_edge_list(petersen)}))
    assert from_cli == from_http


def test_peel_and_distance(client):
    k4 = graph_core.build_clique(4).graph.to_dict()
    peeled = result_of(client.post("/api/graphs/peel", json={"graph": k4, "epsilon": 0.5, "a": 1.4}))
    assert peeled["trace"]["terminal_reason"] == "no-light-edges"
    dist = result_of(client.post("/api/graphs/distance", json={"graph": k4, "target": "bipartite"}))
    assert dist["distance"] == 2


def test_patterns(client):
    forms = result_of(client.get("/api/patterns"))
    assert "kite" in forms
    kite = result_of(client.get("/api/patterns/kite"))
    assert kite["aut"] == 4
    assert kite["alpha"] == "1/8"


def test_count_and_cnf(client):
    built = graph_core.build_turan_plus_edge(6, 3)
    body = {
        "host": built.graph.to_dict(),
        "pattern": "K4",
        "edge": list(built.added_edges[0]),
        "partition": [list(p) for p in built.partition.parts],
    }
    assert result_of(client.post("/api/count", json=body))["value"] == 4
    cnf = result_of(client.post("/api/cnf", json={"pattern": "K4", "n": 6}))
    assert cnf["agree"] is True
    assert cnf["formula"]["value"] == 4


def test_campaigns(client):
    names = result_of(client.get("/api/campaigns"))
    assert "nikiforov" in names
    report = result_of(client.post("/api/campaigns/nikiforov", json={"max_m": 3, "r": 2}))
    assert report["summary"]["pass"] is True
    assert report["campaign"] == "nikiforov"


@pytest.mark.parametrize(
    "url, body",
    [
        ("/api/graphs/spectral", {}),
        ("/api/graphs/spectral", {"graph": "3 1\n0 7\n"}),
        ("/api/graphs/peel", {"graph": {"n": 3, "edges": [[0, 1]]}}),
        ("/api/graphs/construct", {"family": "moebius", "parameters": [3]}),
        ("/api/count", {"host": {"n": 3, "edges": [[0, 1]]}, "pattern": "nonsense"}),
        ("/api/cnf", {"pattern": "C4", "n": 8, "method": "formula"}),
        ("/api/campaigns/nikiforov", {"max_m": 30}),
    ],
)
def test_errors_are_json_400(client, url, body):
    response = client.post(url, json=body)
    assert response.status_code == 400
    assert response.get_json()["success"] is False


def test_unknown_route_is_json_404(client):
    response = client.get("/api/nowhere")
    assert response.status_code == 404
    assert response.get_json() == {"success": False, "error": "not found"}


def test_campaign_rate_limit():
    app = create_app({"TESTING": True, "RATELIMIT_ENABLED": True, "CAMPAIGN_RATE_LIMIT": "1 per minute",
                      "RATELIMIT_STORAGE_URI": "memory://"})
    client = app.test_client()
    result_of(client.post("/api/campaigns/partial-turan", json={"m_values": "1..3", "r_values": "2"}))
    limited = client.post("/api/campaigns/partial-turan", json={"m_values": "1..3", "r_values": "2"})
    assert limited.status_code == 429
    assert limited.get_json()["success"] is False


def test_campaign_ignores_client_override(client):
    body = {"r": 2, "pattern": "K3", "n_values": [40], "q_values": [1], "override": True}
    response = client.post("/api/campaigns/mubayi-sweep", json=body)
    assert response.status_code == 400
    assert "SWEEP_MAX_N" in response.get_json()["error"]


def test_cnf_ignores_client_override(client):
    body = {"pattern": "petersen", "n": 6, "method": "brute-force", "override": True}
    response = client.post("/api/cnf", json=body)
    assert response.status_code == 400
    assert "COUNT_MAX_PATTERN" in response.get_json()["error"]
