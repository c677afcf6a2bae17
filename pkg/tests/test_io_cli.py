import json

import pytest

from dimers import fixture_names, load_fixture
from dimers.cli import main
from dimers.matchings import pm_polygon
from dimers.modelio import (
    analysis_report, dump_model, load_model, polygon_svg, report_text,
)


def test_dump_load_round_trip(fixture):
    text = dump_model(fixture)
    back = load_model(text)
    g1, g2 = fixture.graph, back.graph
    assert g1.nodes == g2.nodes
    assert g1.edges == g2.edges
    assert g1.rotations == g2.rotations
    assert [f.label for f in g1.faces] == [f.label for f in g2.faces]
    assert [f.darts for f in g1.faces] == [f.darts for f in g2.faces]
    assert back.reference_pm == fixture.reference_pm
    assert back.pm_aliases == fixture.pm_aliases
    assert dump_model(back) == text


def test_unsupported_format_version():
    with pytest.raises(ValueError):
        load_model(json.dumps({"format_version": 99}))


def test_report_is_deterministic(fixture):
    r1 = analysis_report(fixture, fixture.theta)
    r2 = analysis_report(fixture, fixture.theta)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_report_cross_consistency(fixture):
    report = analysis_report(fixture)
    for row in report["perfect_matchings"]:
        assert (row["class"] == "internal") == row["acyclic"]
        assert (row["dimension"] == "infinite") == (not row["acyclic"])
    assert report_text(report)


def test_polygon_svg(models):
    poly = pm_polygon(models["square4"].graph, models["square4"].reference_pm)
    svg = polygon_svg(poly, labels={(0, 0): "origin"})
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    assert "origin" in svg


def test_cli_validate_ok(capsys):
    assert main(["validate", "square4"]) == 0
    assert "ok" in capsys.readouterr().out


def test_cli_validate_rejects_corrupted(tmp_path, capsys):
    data = json.loads(dump_model(load_fixture("square4")))
    data["edges"][0]["shift"] = [5, 5]
    del data["faces"]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    assert main(["validate", str(path)]) == 1
    captured = capsys.readouterr()
    assert "face-shift" in captured.out + captured.err


def test_cli_analyze_json(capsys):
    assert main(["analyze", "square4", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["perfect_matchings"]) == 8
    assert report["zigzag"]["count"] == 4


def test_cli_unknown_model(capsys):
    with pytest.raises(SystemExit) as err:
        main(["analyze", "nosuch"])
    assert err.value.code == 2


def test_cli_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["analyze"])
    assert err.value.code == 2


def test_cli_consistency_exit_codes(tmp_path):
    assert main(["consistency", "octo8", "--lp"]) == 0


def test_cli_polygon_svg(tmp_path, capsys):
    out = tmp_path / "poly.svg"
    assert main(["polygon", "square4", "--svg", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_cli_stable_pms(capsys):
    assert main(["stable-pms", "octo8"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["bijective"] is True
    assert len(data["stable"]) == 8


def test_cli_triangulate(capsys):
    assert main(["triangulate", "hex7"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["triangles"]) == 7


def test_cli_mutate_pm(capsys):
    assert main(["mutate-pm", "octo8", "--pm", "D7", "--vertex", "0",
                 "--dir", "plus"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["matching"]) == 6


def test_cli_exchange_graph(tmp_path, capsys):
    out = tmp_path / "graph.dot"
    assert main(["exchange-graph", "octo8", "--pm", "D7", "--dot", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("graph")
    assert text.count("--") == 20


def test_cli_mutate_dimer_round_trip(tmp_path, capsys):
    out = tmp_path / "mutated.json"
    assert main(["mutate-dimer", "octo8", "--face", "0", "--out", str(out)]) == 0
    back = load_model(out.read_text())
    assert len(back.graph.edges) == 22
    assert main(["validate", str(out)]) == 0


def test_cli_mutate_qp(capsys):
    assert main(["mutate-qp", "octo8", "--vertex", "0",
                 "--graded", "--pm", "D7"]) == 0
    assert "digraph" in capsys.readouterr().out


def test_cli_algebra(capsys):
    assert main(["algebra", "conifold", "--pm", "Dd", "--drop-vertex", "0"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dimension"] == "infinite"
    assert data["dimension_without_vertex"] == 1


def test_cli_fixtures(capsys):
    assert main(["fixtures", "list"]) == 0
    names = capsys.readouterr().out.split()
    assert names == sorted(fixture_names())
    assert main(["fixtures", "dump", "hex7"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["name"] == "hex7"
