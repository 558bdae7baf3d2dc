import json
from dataclasses import replace

import pytest
from click.testing import CliRunner

from supersat.cli import cli, run
from supersat.constants.report import CSV_COLUMNS
from supersat.services import graph_core
from supersat.services.campaign_service import CAMPAIGNS
from supersat.settings import Config


def run_json(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def test_construct_then_spectral(tmp_path, capsys):
    path = tmp_path / "t63.txt"
    assert run(["construct", "--family", "turan", "--n", "6", "--r", "3", "-o", str(path)]) == 0
    assert path.read_text(encoding="ascii").startswith("6 12\n")
    payload = run_json(capsys, "spectral", str(path))
    assert payload["spectral"]["rho"] == pytest.approx(4.0, abs=1e-9)
    assert payload["light_edges"] == []


def test_construct_prints_the_report(capsys):
    payload = run_json(capsys, "construct", "--family", "turan-plus-edge", "--n", "7", "--r", "3")
    assert payload["graph"]["m"] == 17
    assert payload["added_edges"] == [[5, 6]]
    assert "graph6" in payload


def test_construct_reports_missing_parameters(capsys):
    assert run(["construct", "--family", "turan", "--n", "6"]) == 1
    assert "--r" in capsys.readouterr().err


def test_cnf_both_methods_agree(capsys):
    payload = run_json(capsys, "cnf", "--pattern", "K3", "--n", "6")
    assert payload["agree"] is True
    assert payload["formula"]["value"] == 3


def test_cnf_scan_and_alpha(capsys):
    assert run_json(capsys, "cnf", "--pattern", "C5", "--method", "alpha")["alpha"] == "1/8"
    scan = run_json(capsys, "cnf", "--pattern", "C5", "--method", "scan", "--n-values", "6,8,10,12")
    assert scan["details"]["findings"] == [6, 8, 10]


def test_pattern_profile(capsys):
    payload = run_json(capsys, "pattern", "--name", "kite", "--no-colorings")
    assert payload["aut"] == 4
    assert payload["alpha"] == "1/8"
    assert "colorings" not in payload


def test_count_through_edge(graph_file, capsys):
    built = graph_core.build_turan_plus_edge(6, 3)
    u, v = built.added_edges[0]
    path = graph_file(built.graph)
    payload = run_json(capsys, "count", path, "--pattern", "K4", "--edge", f"{u},{v}")
    assert payload["value"] == 4
    assert run_json(capsys, "count", path, "--pattern", "K4")["value"] == 4


def test_distance(graph_file, capsys):
    path = graph_file(graph_core.build_cycle(5).graph)
    assert run_json(capsys, "distance", path, "--target", "bipartite")["distance"] == 3
    heuristic = run_json(capsys, "--seed", "3", "distance", path, "--mode", "heuristic", "--starts", "4")
    assert heuristic["distance"] >= 3
    assert heuristic["method"] == "local-search-upper-bound"


def test_peel(graph_file, capsys):
    path = graph_file(graph_core.build_clique(4).graph)
    payload = run_json(capsys, "peel", path, "--epsilon", "0.5", "--a", "1.4")
    assert payload["trace"]["terminal_reason"] == "no-light-edges"
    assert all(check["status"] != "fail" for check in payload["checks"])


def test_enumerate(capsys):
    assert run_json(capsys, "enumerate", "--max-n", "4", "--m", "2")["count"] == 2
    assert run_json(capsys, "enumerate", "--max-n", "4", "--m", "2", "--labeled")["count"] == 15


def test_usage_and_runtime_errors(graph_file, capsys):
    assert run(["cnf"]) == 1
    assert "error:" in capsys.readouterr().err
    assert run(["cnf", "--pattern", "C4", "--n", "8", "--method", "formula"]) == 1
    assert "color-critical" in capsys.readouterr().err
    bad = graph_file(graph_core.build_clique(3).graph, "bad.txt")
    with open(bad, "w", encoding="ascii") as fh:
        fh.write("3 1\n0 5\n")
    assert run(["spectral", bad]) == 1
    assert run(["no-such-command"]) == 1


def test_campaign_from_spec_file(tmp_path, capsys):
    spec = tmp_path / "partial.cfg"
    spec.write_text("campaign = partial-turan\nm_values = 1..12\n# r_values stays default\n", encoding="utf-8")
    payload = run_json(capsys, "--workers", "1", "campaign", str(spec), "--set", "r_values=2,3")
    assert payload["campaign"] == "partial-turan"
    assert payload["summary"]["pass"] is True
    assert payload["grid"]["r_values"] == [2, 3]


def test_campaign_csv_output(tmp_path, capsys):
    out = tmp_path / "nik.csv"
    assert run(["--workers", "1", "campaign", "--name", "nikiforov", "--set", "max_m=3", "-o", str(out)]) == 0
    header = out.read_text(encoding="utf-8").splitlines()[0]
    assert header.split(",") == list(CSV_COLUMNS)
    assert "counterexample" in capsys.readouterr().err


def test_campaign_seeds_follow_the_global_seed(monkeypatch, capsys):
    assert CAMPAIGNS["peel-properties"].default_seeds == tuple(range(1000))
    shorter = replace(CAMPAIGNS["peel-properties"], default_seeds=tuple(range(20)))
    monkeypatch.setitem(CAMPAIGNS, "peel-properties", shorter)
    payload = run_json(capsys, "--seed", "7", "--workers", "1", "campaign", "--name", "peel-properties",
                       "--set", "n_values=10")
    assert payload["grid"]["seeds"] == list(range(7, 27))


def test_campaign_counterexample_exit_code(monkeypatch, capsys):
    # a negative slack turns every equality case into a violation
    monkeypatch.setattr(Config, "CAMPAIGN_SLACK", -1.0)
    assert run(["--workers", "1", "campaign", "--name", "nikiforov", "--set", "max_m=2"]) == 2
    assert json.loads(capsys.readouterr().out)["summary"]["pass"] is False


def test_campaign_needs_exactly_one_source(tmp_path):
    assert run(["campaign"]) == 1
    spec = tmp_path / "x.cfg"
    spec.write_text("campaign = nikiforov\n", encoding="utf-8")
    assert run(["campaign", str(spec), "--name", "nikiforov"]) == 1


def test_help_lists_commands():
    result = CliRunner().invoke(cli, ["--help"])
    assert result.exit_code == 0
    for command in ("spectral", "count", "cnf", "pattern", "peel", "construct", "distance", "campaign", "enumerate"):
        assert command in result.output
