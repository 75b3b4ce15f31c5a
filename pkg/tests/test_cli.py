"""Command-line interface: commands, formats, exit codes, determinism."""

import json

import pytest

from alontarsi import named_graph, parse_edge_list_text, to_edge_list_text
from alontarsi.cli import main
from alontarsi.verify import run_campaign


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text(to_edge_list_text(named_graph("K4")))
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.edges"
    path.write_text(to_edge_list_text(named_graph("K3")))
    return str(path)


class TestConstruct:
    def test_line_of_k4(self, k4_file, tmp_path, capsys):
        out = tmp_path / "lk4.edges"
        aux = tmp_path / "map.json"
        code = main(["construct", "line", k4_file, "-o", str(out), "--map", str(aux)])
        assert code == 0
        g = parse_edge_list_text(out.read_text())
        assert (g.n, g.m) == (6, 12)
        mapping = json.loads(aux.read_text())
        assert len(mapping["edge_to_vertex"]) == 6

    def test_total_of_k2_is_triangle(self, tmp_path, capsys):
        src = tmp_path / "k2.edges"
        src.write_text("2 1\n0 1\n")
        code = main(["construct", "total", str(src)])
        assert code == 0
        g = parse_edge_list_text(capsys.readouterr().out)
        assert (g.n, g.m) == (3, 3)

    def test_efl_p3(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"k": 2, "cliques": [[0, 1], [1, 2]]}')
        code = main(["construct", "efl", str(cfg)])
        assert code == 0
        g = parse_edge_list_text(capsys.readouterr().out)
        assert (g.n, g.m) == (3, 2)

    def test_round_trip_identity(self, k4_file, tmp_path, capsys):
        out = tmp_path / "copy.edges"
        code = main(["construct", "double", k4_file, "-o", str(out)])
        assert code == 0
        g = parse_edge_list_text(out.read_text())
        assert to_edge_list_text(g) == out.read_text()

    def test_augment_rejects_class1(self, k4_file, capsys):
        assert main(["construct", "augment", k4_file]) == 2


class TestAtn:
    def test_both_methods_agree(self, k3_file, capsys):
        code = main(["atn", k3_file, "--method", "both", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["atn"] == 3
        assert payload["certificates"]["poly"]["kind"] == "monomial"
        assert payload["certificates"]["orient"]["kind"] == "orientation"

    def test_text_format(self, k3_file, capsys):
        assert main(["atn", k3_file]) == 0
        assert "ATN = 3" in capsys.readouterr().out

    def test_edgeless(self, tmp_path, capsys):
        src = tmp_path / "e.edges"
        src.write_text("5 0\n")
        assert main(["atn", str(src), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["atn"] == 1

    def test_guard_exit_code(self, tmp_path, capsys):
        src = tmp_path / "k7.edges"
        src.write_text(to_edge_list_text(named_graph("K7")))
        assert main(["atn", str(src), "--method", "orient", "--max-edges", "10"]) == 3

    def test_missing_file(self, capsys):
        assert main(["atn", "no-such-file.edges"]) == 2


class TestCensus:
    def test_acyclic(self, k4_file, capsys):
        assert main(["census", k4_file, "--bits", "0x0"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "alonTarsi": True,
            "even": 1,
            "maxOutdegree": 3,
            "odd": 0,
        }

    def test_cyclic_triangle(self, k3_file, capsys):
        assert main(["census", k3_file, "--bits", "0x2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert (payload["even"], payload["odd"]) == (1, 1)
        assert payload["alonTarsi"] is False

    def test_bits_out_of_range(self, k3_file, capsys):
        assert main(["census", k3_file, "--bits", "0xff"]) == 2


class TestChoosable:
    def test_triangle_not_2_choosable(self, k3_file, capsys):
        code = main(["choosable", k3_file, "-k", "2", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["choosable"] is False
        assert payload["witness"] == [[0, 1], [0, 1], [0, 1]]

    def test_guard(self, tmp_path, capsys):
        src = tmp_path / "k44.edges"
        src.write_text(to_edge_list_text(named_graph("K4,4")))
        assert main(["choosable", str(src), "-k", "3"]) == 3


class TestEfl:
    def test_generate_counts(self, capsys):
        assert main(["efl", "generate", "-k", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 5
        assert all(json.loads(ln)["k"] == 3 for ln in lines)

    def test_certify_catalog(self, capsys):
        assert main(["efl", "certify", "-k", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3  # k=1 and both k=2 configs
        for ln in lines:
            rep = json.loads(ln)
            assert rep["conclusion_holds"] and rep["engines_agree"]

    def test_certify_single_config(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"k": 3, "cliques": [[0,1,2],[0,3,4],[0,5,6]]}')
        assert main(["efl", "certify", "--config", str(cfg)]) == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["atn"] == 3

    def test_generate_guard(self, capsys):
        assert main(["efl", "generate", "-k", "4"]) == 3

    def test_invalid_config(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"k": 2, "cliques": [[0,1],[0,1]]}')
        assert main(["efl", "certify", "--config", str(cfg)]) == 2


class TestVerify:
    def test_thm1_json_stream(self, capsys):
        assert main(["verify", "thm1", "--format", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3
        for ln in lines:
            rep = json.loads(ln)
            assert rep["pass"] is True
            assert rep["campaign"] == "thm1"

    def test_text_format(self, capsys):
        assert main(["verify", "cor3", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 6

    def test_reports_deterministic_except_wall_time(self):
        def strip(reports):
            return [{k: v for k, v in r.items() if k != "wall_ms"} for r in reports]

        a = strip(run_campaign("thm4"))
        b = strip(run_campaign("thm4"))
        assert a == b

    def test_jobs_match_sequential(self):
        def strip(reports):
            return [{k: v for k, v in r.items() if k != "wall_ms"} for r in reports]

        assert strip(run_campaign("cor3", jobs=2)) == strip(run_campaign("cor3"))

    def test_max_edges_shrinks_family(self, capsys):
        assert main(["verify", "thm2", "--max-edges", "3", "--format", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 5  # connected graphs with 1 <= m <= 3

    def test_unknown_campaign_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "nope"])


class TestReportAggregation:
    def test_skip_is_not_failure(self):
        from alontarsi.verify import campaign_passed, report_passed

        good = {"claims": {"a": True, "b": "SKIP"}}
        bad = {"claims": {"a": True, "b": False}}
        assert report_passed(good) and not report_passed(bad)
        assert campaign_passed([good]) and not campaign_passed([good, bad])

    def test_report_lines_are_json(self, capsys):
        import json as _json

        from alontarsi.verify import report_line, run_campaign

        for report in run_campaign("thm4"):
            parsed = _json.loads(report_line(report))
            assert parsed["campaign"] == "thm4"

    def test_unknown_campaign_config(self):
        import pytest as _pytest

        from alontarsi.verify import default_config

        with _pytest.raises(ValueError):
            default_config("nope")
