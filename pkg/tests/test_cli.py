import csv
import io
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from snburst import Graph, Layout, gen_wagner, parse_edge_list
from snburst.cli import EXIT_IO, EXIT_NUMERIC, EXIT_USAGE, main
from snburst.render import (
    layout_to_csv,
    layout_to_svg,
    read_layout_csv,
    trajectory_to_csv,
)

PATH4 = "0 1\n1 2\n2 3\n"


def write_graph(tmp_path, name="g.txt", text=PATH4):
    p = tmp_path / name
    p.write_text(text)
    return p


def svg_counts(path):
    root = ET.parse(path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    return (
        len(root.findall(f".//{ns}circle")),
        len(root.findall(f".//{ns}line")),
    )


class TestRender:
    def test_svg_structure(self):
        g = gen_wagner()
        layout = Layout(np.random.default_rng(0).random((8, 2)))
        svg = layout_to_svg(g, layout)
        root = ET.fromstring(svg)
        ns = "{http://www.w3.org/2000/svg}"
        assert len(root.findall(f".//{ns}circle")) == g.n
        assert len(root.findall(f".//{ns}line")) == g.m

    def test_svg_labels(self):
        g = Graph(2, ((0, 1),), labels=("alpha", "beta"))
        svg = layout_to_svg(g, Layout(np.array([[0.0, 0.0], [1.0, 1.0]])), labels=True)
        assert "alpha" in svg and "beta" in svg

    def test_layout_csv_roundtrip(self):
        layout = Layout(np.array([[0.0, 0.0], [1.0, 0.25], [0.5, 1.0]]))
        back = read_layout_csv(layout_to_csv(layout))
        assert np.allclose(back.coords, layout.coords)

    def test_layout_csv_bad_header(self):
        with pytest.raises(ValueError, match="header"):
            read_layout_csv("a,b,c\n0,0,0\n")

    def test_layout_csv_bad_ids(self):
        with pytest.raises(ValueError, match="0..n-1"):
            read_layout_csv("vertex,x,y\n0,0,0\n2,1,1\n")

    def test_trajectory_csv(self):
        traj = [(5, Layout(np.array([[0.0, 0.0], [1.0, 1.0]]), 5))]
        rows = list(csv.reader(io.StringIO(trajectory_to_csv(traj))))
        assert rows[0] == ["t", "vertex", "x", "y"]
        assert rows[1][:2] == ["5", "0"]


class TestLayoutCommand:
    def test_happy_path_snb(self, tmp_path):
        gpath = write_graph(tmp_path)
        assert main(["layout", str(gpath), "--out-dir", str(tmp_path)]) == 0
        svg = tmp_path / "g_snb.svg"
        csv_path = tmp_path / "g_snb.csv"
        assert svg.exists() and csv_path.exists()
        assert svg_counts(svg) == (4, 3)
        layout = read_layout_csv(csv_path.read_text())
        assert len(layout) == 4

    def test_fr_suffix(self, tmp_path):
        gpath = write_graph(tmp_path)
        assert main(["layout", str(gpath), "--alg", "fr", "--out-dir", str(tmp_path)]) == 0
        assert (tmp_path / "g_fr.svg").exists()

    def test_missing_file_is_io_error(self, tmp_path):
        assert main(["layout", str(tmp_path / "absent.txt")]) == EXIT_IO

    def test_unparseable_file_is_io_error(self, tmp_path):
        gpath = write_graph(tmp_path, text="not an edge list\n")
        assert main(["layout", str(gpath)]) == EXIT_IO

    def test_env_out_dir(self, tmp_path, monkeypatch):
        gpath = write_graph(tmp_path)
        dest = tmp_path / "outputs"
        monkeypatch.setenv("SNBURST_OUT_DIR", str(dest))
        assert main(["layout", str(gpath)]) == 0
        assert (dest / "g_snb.svg").exists()


class TestMetricsCommand:
    def test_json_schema(self, tmp_path, capsys):
        gpath = write_graph(tmp_path)
        assert main(["layout", str(gpath), "--out-dir", str(tmp_path)]) == 0
        capsys.readouterr()
        assert main(["metrics", str(gpath), str(tmp_path / "g_snb.csv")]) == 0
        data = json.loads(capsys.readouterr().out)
        for key in (
            "crossings",
            "avg_crossing_angle",
            "avg_adjacent_angle",
            "edge_length_stdev",
            "min_pair_distance_scaled",
            "vertex_distribution",
            "drawing_area",
            "degenerate_bbox",
        ):
            assert key in data
        assert isinstance(data["crossings"], int)

    def test_csv_format(self, tmp_path, capsys):
        gpath = write_graph(tmp_path)
        main(["layout", str(gpath), "--out-dir", str(tmp_path)])
        capsys.readouterr()
        assert main(["metrics", str(gpath), str(tmp_path / "g_snb.csv"),
                     "--format", "csv"]) == 0
        out = capsys.readouterr().out
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1 and "crossings" in rows[0]

    def test_vertex_count_mismatch(self, tmp_path):
        gpath = write_graph(tmp_path)
        lpath = tmp_path / "short.csv"
        lpath.write_text("vertex,x,y\n0,0,0\n1,1,1\n")
        assert main(["metrics", str(gpath), str(lpath)]) == EXIT_IO

    def test_output_file(self, tmp_path):
        gpath = write_graph(tmp_path)
        main(["layout", str(gpath), "--out-dir", str(tmp_path)])
        dest = tmp_path / "report.json"
        assert main(["metrics", str(gpath), str(tmp_path / "g_snb.csv"),
                     "-o", str(dest)]) == 0
        assert "crossings" in json.loads(dest.read_text())


class TestBenchCommand:
    def test_writes_both_csvs(self, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "a.txt").write_text(PATH4)
        (corpus / "b.txt").write_text("0 1\n1 2\n2 0\n")
        out = tmp_path / "results"
        assert main(["bench", str(corpus), "--out-dir", str(out)]) == 0
        records = list(csv.DictReader(io.StringIO((out / "records.csv").read_text())))
        assert len(records) == 4  # 2 graphs x 2 algorithms
        assert {r["algorithm"] for r in records} == {"snb", "fr"}
        buckets = list(csv.DictReader(io.StringIO((out / "buckets.csv").read_text())))
        assert len(buckets) == 2  # both graphs land in bucket 0

    def test_empty_corpus_is_io_error(self, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        assert main(["bench", str(corpus)]) == EXIT_IO


class TestCurveCommand:
    def test_sign_change_and_t_max(self, tmp_path):
        gpath = write_graph(tmp_path)
        dest = tmp_path / "curve.csv"
        assert main(["curve", str(gpath), "-o", str(dest)]) == 0
        rows = list(csv.DictReader(io.StringIO(dest.read_text())))
        assert len(rows) == 80  # 20n for the 4-vertex path
        assert rows[0]["t"] == "1"
        fs = [float(r["f"]) for r in rows]
        assert fs[0] > 0 and fs[-1] < 0
        signs = [f > 0 for f in fs if f != 0]
        assert sum(1 for a, b in zip(signs, signs[1:]) if a != b) == 1

    def test_t_max_one(self, tmp_path, capsys):
        gpath = write_graph(tmp_path)
        assert main(["curve", str(gpath), "--t-max", "1"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert len(rows) == 1


class TestGenerateCommand:
    def test_queen(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["generate", "queen", "8", "8"]) == 0
        g = parse_edge_list((tmp_path / "queen_8_8.txt").read_text())
        assert (g.n, g.m) == (64, 728)

    def test_heawood_graphml(self, tmp_path):
        dest = tmp_path / "h.graphml"
        assert main(["generate", "heawood", "--format", "graphml",
                     "-o", str(dest)]) == 0
        from snburst import parse_graphml

        g = parse_graphml(dest.read_text())
        assert (g.n, g.m) == (14, 21)

    def test_scale_free_target_m(self, tmp_path):
        dest = tmp_path / "sf.txt"
        assert main(["generate", "scale-free", "130", "--seed", "3",
                     "--target-m", "190", "-o", str(dest)]) == 0
        g = parse_edge_list(dest.read_text())
        assert (g.n, g.m) == (130, 190)

    def test_unknown_generator_is_usage_error(self):
        assert main(["generate", "petersen"]) == EXIT_USAGE

    def test_queen_missing_params_is_usage_error(self):
        assert main(["generate", "queen", "8"]) == EXIT_USAGE

    def test_bad_generator_params_is_io_error(self, tmp_path):
        dest = tmp_path / "x.txt"
        assert main(["generate", "queen", "0", "5", "-o", str(dest)]) == EXIT_IO


class TestExitCodes:
    def test_unknown_command_is_usage_error(self):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_degenerate_graph_is_numeric_error(self, tmp_path):
        # A graph whose layout cannot be normalized: single edge collapses
        # to one point only in contrived cases, so use the degenerate-run
        # route instead: an empty graph file fails at parse (IO), while a
        # one-vertex graph cannot be expressed in an edge list.  Exercise the
        # numeric branch through the API mapping directly.
        from snburst import DegenerateGraphError
        from snburst.cli import cli
        import click

        @cli.command("boom", hidden=True)
        def _boom():
            raise DegenerateGraphError("synthetic")

        try:
            assert main(["boom"]) == EXIT_NUMERIC
        finally:
            del cli.commands["boom"]
