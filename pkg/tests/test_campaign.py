import csv
import io
import json
import random

import pytest

from mixedrandic import ParseError, directed_cycle, population
from mixedrandic.campaign import (
    CampaignConfig,
    edge_list_label,
    format_float,
    parse_campaign_config,
    render_csv,
    render_json,
    run_campaign,
    summary_text,
    with_overrides,
)


def test_population_sizes():
    assert len(population(2)) == 3
    assert len(population(3)) == 54
    # 16 trees * 27 + 15 unicyclic * 81 + 6 five-edge * 243 + 729
    assert len(population(4)) == 3834
    assert len(population(5)) == 500
    assert len(population(6)) == 500


def test_population_is_deterministic():
    assert population(5) == population(5)
    assert population(5, seed=4) != population(5, seed=5)
    for g in population(5)[:50]:
        assert g.is_connected()
        assert min(g.degrees()) >= 1


def test_population_truncation():
    assert len(population(3, sample_limit=10)) == 10


def test_parse_campaign_config():
    cfg = parse_campaign_config(
        "# campaign\nn_min 2\nn_max 3\nmin_degree 1\nsample_limit 20\nseed 99\nformat csv\njobs 2\n"
    )
    assert cfg.n_min == 2 and cfg.n_max == 3
    assert cfg.sample_limit == 20
    assert cfg.seed == 99
    assert cfg.format == "csv"
    assert cfg.jobs == 2


@pytest.mark.parametrize(
    "text",
    [
        "bogus 3\n",
        "n_min two\n",
        "connected_only maybe\n",
    ],
)
def test_parse_campaign_config_errors(text):
    with pytest.raises(ParseError) as err:
        parse_campaign_config(text)
    assert "line 1" in str(err.value)


def test_parse_campaign_config_rejects_bad_format():
    with pytest.raises(ParseError):
        parse_campaign_config("format xml\n")


def test_config_validation():
    with pytest.raises(ValueError):
        CampaignConfig(n_min=3, n_max=2)
    with pytest.raises(ValueError):
        CampaignConfig(jobs=0)
    with pytest.raises(ValueError):
        CampaignConfig(format="yaml")


def test_with_overrides_skips_none():
    base = CampaignConfig(n_min=2, n_max=3)
    assert with_overrides(base, n_max=None, seed=None) == base
    assert with_overrides(base, n_max=4).n_max == 4


def test_edge_list_label():
    assert edge_list_label(directed_cycle(3)) == "1->2 2->3 3->1"


def test_format_float_round_trips():
    rng = random.Random(5)
    for _ in range(200):
        x = rng.uniform(-2, 2)
        assert float(format_float(x)) == x
    assert format_float(0.5) == "0.5"


def test_tiny_campaign_counts():
    result = run_campaign(CampaignConfig(n_min=2, n_max=2))
    assert len(result.results) == 3
    assert result.checks == 84
    assert result.failures == []
    assert result.skip_count == 3  # each single-edge graph has one undeletable edge
    assert result.divergence_count == 0


def test_n3_campaign_divergences():
    result = run_campaign(CampaignConfig(n_min=3, n_max=3))
    assert len(result.results) == 54
    assert result.failures == []
    # exactly the two all-arc triangles have eigenvalue -1 without being
    # positive bipartite
    assert result.divergence_count == 2


def test_report_bytes_do_not_depend_on_output_or_jobs():
    plain = run_campaign(CampaignConfig(n_min=2, n_max=3))
    routed = run_campaign(CampaignConfig(n_min=2, n_max=3, output="elsewhere.json", jobs=3))
    assert render_json(plain) == render_json(routed)
    assert render_csv(plain) == render_csv(routed)


def test_json_report_is_valid_json():
    result = run_campaign(CampaignConfig(n_min=2, n_max=2))
    doc = json.loads(render_json(result))
    assert doc["config"]["n_min"] == 2
    assert len(doc["graphs"]) == 3
    assert doc["summary"]["graphs"] == 3
    assert doc["summary"]["failures"] == 0


def test_csv_report_shape():
    result = run_campaign(CampaignConfig(n_min=2, n_max=2, format="csv"))
    rows = list(csv.reader(io.StringIO(render_csv(result))))
    assert rows[0] == ["index", "n", "edges", "check", "lhs", "rhs", "slack",
                       "satisfied", "skipped", "reason"]
    assert len(rows) == 1 + result.checks
    assert all(len(row) == 10 for row in rows)


def test_csv_and_json_carry_identical_records():
    result = run_campaign(CampaignConfig(n_min=2, n_max=2))
    doc = json.loads(render_json(result))
    flat = {}
    for entry in doc["graphs"]:
        for name, record in entry["checks"].items():
            flat[(entry["index"], name)] = record
    rows = list(csv.reader(io.StringIO(render_csv(result))))[1:]
    assert len(rows) == len(flat)
    for index, _, _, check, lhs, rhs, slack, satisfied, skipped, reason in rows:
        record = flat[(int(index), check)]
        for text, value in ((lhs, record["lhs"]), (rhs, record["rhs"]), (slack, record["slack"])):
            if text == "":
                assert value is None
            else:
                assert float(text) == float(value)
        assert (satisfied == "true") == record["satisfied"]
        assert (skipped == "true") == record["skipped"]
        assert reason == record["reason"]


def test_summary_text():
    result = run_campaign(CampaignConfig(n_min=2, n_max=2))
    lines = summary_text(result).splitlines()
    assert lines[0] == "graphs 3"
    assert lines[1] == "checks 84"
    assert lines[2] == "failures 0"
    assert any(line.startswith("max_abs_slack ") for line in lines)
