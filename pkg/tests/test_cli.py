import json

import pytest

from mixedrandic import cycle_graph, directed_cycle, serialize_graph
from mixedrandic.cli import main

SYMMETRIC_NON_BIPARTITE = (
    "mixedgraph v1\nvertices 4\n1 -> 2\n1 -> 3\n2 -- 3\n2 -> 4\n4 -> 1\n"
)


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text(serialize_graph(cycle_graph(3)))
    return str(path)


@pytest.fixture
def dc3_file(tmp_path):
    path = tmp_path / "dc3.txt"
    path.write_text(serialize_graph(directed_cycle(3)))
    return str(path)


def test_spectrum_text(c3_file, capsys):
    assert main(["spectrum", c3_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("eigenvalues: ")
    assert "negative_count: 2" in out


def test_spectrum_json(c3_file, capsys):
    assert main(["spectrum", c3_file, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["eigenvalues"]) == 3
    assert abs(doc["energy"] - 2) < 1e-12


def test_charpoly_both_methods(c3_file, capsys):
    assert main(["charpoly", c3_file, "--method", "both"]) == 0
    out = capsys.readouterr().out
    assert "method combinatorial" in out
    assert "method numeric" in out
    assert "a_2 -3/4" in out
    assert "max_difference" in out


def test_charpoly_single_method(c3_file, capsys):
    assert main(["charpoly", c3_file, "--method", "combinatorial"]) == 0
    out = capsys.readouterr().out
    assert "a_3 -1/4" in out
    assert "max_difference" not in out


def test_energy(c3_file, capsys):
    assert main(["energy", c3_file, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["randic_inverse"] - 0.75) < 1e-12


def test_bounds(c3_file, capsys):
    assert main(["bounds", c3_file, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "energy_lower_geometric" in doc["checks"]
    assert all(record["satisfied"] or record["skipped"] for record in doc["checks"].values())


def test_interlace(c3_file, capsys):
    assert main(["interlace", c3_file, "--edge", "1,2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["holds"] is True
    assert doc["verdicts"] == [True, True, True]


def test_interlace_rejects_bad_edge_flag(c3_file, capsys):
    assert main(["interlace", c3_file, "--edge", "1-2"]) == 2
    assert main(["interlace", c3_file, "--edge", "1,4"]) == 3
    captured = capsys.readouterr()
    assert "error" in captured.err
    assert "pass" not in captured.err


def test_check_clean_graph(c3_file, capsys):
    assert main(["check", c3_file]) == 0
    out = capsys.readouterr().out
    assert "failures: 0" in out


def test_check_prints_divergence_note(dc3_file, capsys):
    assert main(["check", dc3_file]) == 0
    out = capsys.readouterr().out
    assert "divergence" in out
    assert "failures: 0" in out


def test_check_reports_failures_with_exit_1(tmp_path, capsys):
    path = tmp_path / "odd.txt"
    path.write_text(SYMMETRIC_NON_BIPARTITE)
    assert main(["check", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL bipartite_iff_symmetric" in out


def test_missing_and_malformed_files(tmp_path, capsys):
    assert main(["spectrum", str(tmp_path / "absent.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("mixedgraph v1\nvertices 2\n1 -- 1\n")
    assert main(["spectrum", str(bad)]) == 2
    capsys.readouterr()


def test_isolated_vertex_is_a_precondition_error(tmp_path, capsys):
    path = tmp_path / "iso.txt"
    path.write_text("mixedgraph v1\nvertices 2\n")
    assert main(["spectrum", str(path)]) == 3
    capsys.readouterr()


def test_output_flag_matches_stdout(c3_file, tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["spectrum", c3_file, "--format", "json", "--output", str(target)]) == 0
    capsys.readouterr()
    assert main(["spectrum", c3_file, "--format", "json"]) == 0
    assert target.read_text() == capsys.readouterr().out


def test_unwritable_output(c3_file, tmp_path, capsys):
    assert main(["spectrum", c3_file, "--output", str(tmp_path / "no" / "dir.txt")]) == 4
    capsys.readouterr()


def test_enumerate_with_config_and_overrides(tmp_path, capsys):
    config = tmp_path / "campaign.cfg"
    config.write_text("n_min 2\nn_max 3\n")
    report = tmp_path / "report.json"
    assert main(["enumerate", "--config", str(config), "--n-max", "2",
                 "--output", str(report)]) == 0
    summary = capsys.readouterr().out
    assert "graphs 3" in summary
    doc = json.loads(report.read_text())
    assert doc["summary"]["graphs"] == 3
    assert doc["summary"]["failures"] == 0


def test_enumerate_to_stdout_keeps_summary_on_stderr(tmp_path, capsys):
    config = tmp_path / "campaign.cfg"
    config.write_text("n_min 2\nn_max 2\n")
    assert main(["enumerate", "--config", str(config)]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["summary"]["graphs"] == 3
    assert "graphs 3" in captured.err


def test_unknown_command_exits_via_argparse(capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate"])
    capsys.readouterr()
