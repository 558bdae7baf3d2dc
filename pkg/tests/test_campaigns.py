import csv
import io
import json

import pytest

from supersat.constants.report import CSV_COLUMNS, SCHEMA_TAG
from supersat.errors import GuardrailError, SupersatError
from supersat.models import CampaignSpec
from supersat.services.campaign_service import (
    CAMPAIGN_NAMES,
    campaign_bollobas_nikiforov,
    campaign_book,
    campaign_mubayi_sweep,
    campaign_nikiforov,
    campaign_spectral_triangles,
    campaign_partial_turan,
    campaign_peel_properties,
    campaign_perturbation,
    campaign_tightness,
    parse_campaign_file,
    random_instance,
    report_format,
    run_campaign,
    write_report,
)


@pytest.mark.parametrize("r", [2, 3])
def test_nikiforov_small(r):
    report = campaign_nikiforov(6, r, workers=1)
    summary = report.summary
    assert summary["pass"]
    assert summary["consistent"]
    assert summary["enumerated"][6] == 68
    assert summary["near_equalities"] >= 1
    equalities = [rec for rec in report.records if rec.values["equality"]]
    assert all(rec.values["extremal_family"] for rec in equalities)


@pytest.mark.slow
def test_nikiforov_full_grid():
    for r in (2, 3):
        assert campaign_nikiforov(9, r).summary["pass"]


def test_exhaustive_campaigns_guard_max_m():
    with pytest.raises(GuardrailError):
        campaign_nikiforov(11, 2, workers=1)


def test_spectral_triangles_and_bollobas_nikiforov():
    triangles = campaign_spectral_triangles(6, workers=1)
    assert triangles.summary["pass"]
    assert triangles.summary["consistent"]
    assert triangles.summary["vacuous"] >= 1
    bn = campaign_bollobas_nikiforov(6, workers=1)
    assert bn.summary["pass"]
    assert bn.summary["filtered"] == 0


def test_book_campaign_reports_findings_not_failures():
    report = campaign_book(6, workers=1)
    assert report.summary["failed"] == 0
    assert {rec.status for rec in report.records} <= {"pass", "finding"}
    assert any(rec.values["book"] for rec in report.records)


def test_tightness():
    report = campaign_tightness(3, "K4", [6, 9, 12], workers=1)
    assert report.summary["pass"]
    for record in report.records:
        assert record.values["copies"] == record.values["c_exact"]
        assert record.margin > 0


def test_tightness_rejects_patterns_of_the_wrong_chromatic_number():
    with pytest.raises(SupersatError):
        campaign_tightness(3, "K3", [6], workers=1)
    with pytest.raises(SupersatError):
        campaign_tightness(3, "K4", [7], workers=1)


def test_peel_properties_on_a_few_seeds():
    report = campaign_peel_properties(range(8), [10, 20], 1.2, workers=1)
    assert report.summary["pass"]
    assert report.grid["seeds"] == list(range(8))
    assert len(report.records) == 8


@pytest.mark.slow
def test_peel_properties_default_seeds():
    report = run_campaign(CampaignSpec("peel-properties"))
    assert report.summary["pass"]
    assert report.grid["seeds"] == list(range(1000))


def test_random_instances_are_seeded():
    assert random_instance(3, 12, ("planted", 3), 0.1) == random_instance(3, 12, ("planted", 3), 0.1)
    assert random_instance(4, 12, ("gnp", 0.5), 0.0) == random_instance(4, 12, ("gnp", 0.5), 0.0)


def test_mubayi_sweep_triangles():
    report = campaign_mubayi_sweep(2, "K3", [6], [1], workers=1)
    (record,) = report.records
    assert record.status == "pass"
    assert record.values["minimum"] == 3
    assert record.values["target"] == 3


def test_partial_turan_defaults():
    report = campaign_partial_turan(list(range(1, 41)), [2, 3, 4], workers=1)
    assert report.summary["pass"]
    assert report.summary["skipped"] > 0


def test_perturbation_few_seeds():
    report = campaign_perturbation(range(5), workers=1)
    assert report.summary["pass"]
    assert all(not rec.values["hypothesis_met"] or rec.status == "pass" for rec in report.records)


@pytest.mark.slow
def test_perturbation_default_seeds():
    assert campaign_perturbation(range(50)).summary["pass"]


def test_parallel_run_matches_serial():
    serial = campaign_nikiforov(5, 2, workers=1)
    parallel = campaign_nikiforov(5, 2, workers=2)
    assert serial.records == parallel.records
    assert serial.summary == parallel.summary


def test_parse_campaign_file():
    spec = parse_campaign_file(
        "# triangle sweep\ncampaign = mubayi-sweep\nn-values = 6\nseeds = 0..3\nworkers = 1\noverride = yes\n"
    )
    assert spec == CampaignSpec("mubayi-sweep", {"n_values": "6"}, (0, 1, 2, 3), None, 1, True)


@pytest.mark.parametrize(
    "text",
    ["n_values = 6\n", "campaign = nikiforov\ncampaign = book-conjecture\n", "campaign nikiforov\n",
     "campaign = nikiforov\nworkers = many\n"],
)
def test_parse_campaign_file_errors(text):
    with pytest.raises(SupersatError):
        parse_campaign_file(text)


def test_unknown_campaign_and_grid_keys():
    with pytest.raises(SupersatError):
        run_campaign(CampaignSpec("no-such-campaign"))
    with pytest.raises(SupersatError):
        run_campaign(CampaignSpec("nikiforov", {"max_m": 3, "colour": "red"}, workers=1))
    assert len(CAMPAIGN_NAMES) == 9


def test_write_report_formats(tmp_path):
    report = campaign_nikiforov(3, 2, workers=1)
    csv_path = tmp_path / "report.csv"
    write_report(report, csv_path)
    rows = list(csv.reader(io.StringIO(csv_path.read_text(encoding="utf-8"))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(report.records) + 1
    assert all(row[0] == "nikiforov" for row in rows[1:])

    json_path = tmp_path / "report.json"
    write_report(report, json_path)
    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["schema"] == SCHEMA_TAG
    assert data["summary"]["instances"] == len(report.records)

    assert report_format("out.txt") == "text"
    assert report_format("out") == "json"
