import csv
import io
import json
import math

import pytest
from hypothesis import given

from hassemorse import (
    DuplicateValue,
    UnknownVertex,
    build_complex,
    extract,
    extract_raw,
    extract_right_child,
    fixtures,
)
from hassemorse.cli import main
from hassemorse.cli_io import (
    ParseError,
    dumps,
    export_dot,
    format_complex,
    format_dot,
    gvf_document,
    gvf_from_document,
    parse_complex_file,
    parse_complex_text,
    result_document,
    write_complex_file,
)

from strategies import complexes


class TestParse:
    def test_basic(self):
        K = parse_complex_text("# an edge\nv 1 0.5\nv 2 1.5\n\ns 1 2\n")
        assert set(K) == {(1,), (2,), (1, 2)}
        assert K.values == {1: 0.5, 2: 1.5}

    def test_vertex_lines_anywhere(self):
        K = parse_complex_text("s 1 2\nv 2 1\nv 1 0\n")
        assert (1, 2) in K

    def test_isolated_vertex(self):
        K = parse_complex_text("v 4 2.0\n")
        assert K.counts == [1]

    def test_unknown_vertex_reports_line(self):
        with pytest.raises(UnknownVertex, match=":3:"):
            parse_complex_text("v 1 0\nv 2 1\ns 1 3\n")

    def test_duplicate_value(self):
        with pytest.raises(DuplicateValue, match="line 1"):
            parse_complex_text("v 1 0\nv 2 0.0\n")

    @pytest.mark.parametrize("text", ["x 1 2\n", "v 1\n", "v a 1\n", "s\n", "v 1 0\nv 1 2\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_complex_text(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            parse_complex_file(tmp_path / "missing.txt")

    def test_fixtures_parse(self):
        assert "cat" in fixtures.names()
        for name in fixtures.names():
            assert fixtures.load(name).n > 0


class TestSerialize:
    @given(complexes())
    def test_round_trip(self, K):
        assert parse_complex_text(format_complex(K)) == K

    def test_file_round_trip(self, cat, tmp_path):
        path = tmp_path / "cat.txt"
        write_complex_file(cat, path)
        assert parse_complex_file(path) == cat

    def test_document_round_trip(self, fixture_complex):
        gvf = extract(fixture_complex, math.inf)
        doc = json.loads(dumps(gvf_document(fixture_complex, gvf)))
        assert gvf_from_document(doc) == gvf

    def test_extractors_serialize_identically(self, fixture_complex):
        K = fixture_complex
        assert dumps(gvf_document(K, extract_right_child(K))) == dumps(gvf_document(K, extract_raw(K)))

    def test_result_document(self, cat):
        doc = result_document(cat, extract_right_child(cat), "right-child", {"comparisons": 3}, 0.5)
        assert doc["algorithm"] == "right-child"
        assert doc["counters"] == {"comparisons": 3, "seconds": 0.5}
        assert doc["critical_counts"] == [2, 1, 0]


class TestDot:
    def test_edge(self, edge):
        text = format_dot(edge, extract_right_child(edge))
        assert text.startswith("digraph")
        assert '"1,2" [label="[1,2]", shape=box' in text
        assert '"2" [label="[2]", shape=pentagon' in text
        assert '"1" [label="[1]", shape=hexagon' in text
        assert '"2" -> "1,2" [style=bold' in text
        assert '"1,2" -> "1";' in text

    def test_cat_critical_edge(self, cat, tmp_path):
        path = tmp_path / "cat.dot"
        export_dot(cat, extract_right_child(cat), path)
        text = path.read_text()
        assert '"2,5" [label="[2,5]", shape=hexagon' in text
        assert text.count("rank = same") == 3

    def test_empty_complex(self):
        K = build_complex([], {})
        text = format_dot(K, extract_right_child(K))
        assert text.strip().endswith("}")


class TestCli:
    def test_compare_every_fixture(self, capsys):
        for name in fixtures.names():
            assert main(["compare", str(fixtures.path(name))]) == 0
        assert "identical" in capsys.readouterr().out

    def test_extract_json(self, capsys):
        assert main(["extract", str(fixtures.path("cat"))]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["criticals"] == [[1], [2], [2, 5]]
        assert doc["counters"]["nodes_visited"] == 17

    def test_extract_full_to_file(self, tmp_path):
        out = tmp_path / "v.json"
        assert main(["extract", str(fixtures.path("v_path")), "--algo", "full", "-o", str(out)]) == 0
        assert json.loads(out.read_text())["criticals"] == [[2]]

    def test_extract_dot(self, capsys):
        assert main(["extract", str(fixtures.path("edge")), "--out", "dot"]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_missing_file_exits_2(self, capsys):
        assert main(["extract", "missing.txt"]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_file_exits_2(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("v 1 0\ns 1 2\n")
        assert main(["validate", str(bad)]) == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["bench", "--dims", "3..1"])
        assert info.value.code == 2

    @pytest.mark.parametrize("algo", ["right-child", "raw", "full"])
    def test_validate(self, algo, capsys):
        assert main(["validate", str(fixtures.path("torus7")), "--algo", algo]) == 0
        out = capsys.readouterr().out
        assert "acyclic" in out and "FAIL" not in out

    def test_bench_lower_link_calls(self, capsys):
        assert main(["bench", "--family", "simplex", "--dims", "1..10", "--algo", "raw"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert [int(r["lower_link_calls"]) for r in rows] == [2 ** (d + 1) - 1 for d in range(1, 11)]

    def test_bench_deterministic(self, capsys):
        def run():
            main(["bench", "--family", "random", "--dims", "1..3", "--trials", "2"])
            rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
            for r in rows:
                del r["seconds"]
            return rows

        first = run()
        assert len(first) == 3 * 2 * 2
        assert run() == first

    def test_demo(self, capsys):
        assert main(["demo"]) == 0
        out = capsys.readouterr().out
        assert "[3, 4, 6]" in out and "vertices critical: [1, 2]" in out
