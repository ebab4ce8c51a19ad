import json

import pytest

from bruric import io as bio
from bruric.curvature import global_ricci
from bruric.errors import ChecksumMismatch, IoError, ParseError, VersionMismatch
from bruric.gamma import gamma_b, gamma_d
from bruric.hasse import Graph, build_hasse, degree_report

from conftest import hasse, table


def test_fnv_reference_values():
    assert bio.fnv1a64(b"") == 0xcbf29ce484222325
    assert bio.fnv1a64(b"a") == 0xaf63dc4c8601ec8c
    assert bio.fnv1a64(b"foobar") == 0x85944171f73967e8


@pytest.mark.parametrize("args", [("A", 3), ("B", 3), ("B", 4), ("D", 4), ("I2", None, 5),
                                  ("H3",), ("F4",)])
def test_round_trip(args, tmp_path):
    g = table(*args) if args[0] != "I2" else table("I2", m=5)
    path = tmp_path / "g.cache"
    bio.save_group(g, path)
    back = bio.load_group(path)
    assert back.same_as(g)
    assert bio.dump_group(back) == path.read_text()


@pytest.mark.slow
def test_e6_round_trip(tmp_path):
    g = table("E6")
    path = tmp_path / "e6.cache"
    bio.save_group(g, path)
    back = bio.load_group(path)
    assert back.same_as(g)
    assert degree_report(build_hasse(back)) == degree_report(hasse("E6"))


def test_truncated_file_reports_line():
    text = bio.dump_group(table("B", 2))
    lines = text.splitlines(keepends=True)
    with pytest.raises(ParseError) as info:
        bio.parse_group("".join(lines[:5]))
    assert info.value.line == 6
    assert str(info.value).startswith("line 6: ")


def test_damaged_line_reports_line():
    lines = bio.dump_group(table("B", 2)).splitlines(keepends=True)
    lines[3] = "2 1 x,y 0,1\n"
    with pytest.raises(ParseError) as info:
        bio.parse_group("".join(lines))
    assert info.value.line == 4


def test_checksum_and_version():
    text = bio.dump_group(table("A", 2))
    with pytest.raises(ChecksumMismatch):
        bio.parse_group(text.replace("\n1 1 ", "\n1 2 ", 1))
    with pytest.raises(VersionMismatch):
        bio.parse_group(text.replace(" v1 ", " v2 ", 1))
    with pytest.raises(ParseError):
        bio.parse_group("")
    with pytest.raises(ParseError):
        bio.parse_group("NOT-A-CACHE v1 A 2\n")


def test_missing_file():
    with pytest.raises(IoError):
        bio.load_group("/nonexistent/dir/x.cache")
    with pytest.raises(OSError):
        bio.save_group(table("A", 1), "/nonexistent/dir/x.cache")


def test_dot_hasse():
    text = bio.dot_text(hasse("A", 2))
    assert text.startswith("graph G {") and text.endswith("}\n")
    assert text.count(" -- ") == 8
    assert '[label="1,2,3"]' in text


def test_dot_gamma_graphs():
    text = bio.dot_text(gamma_b((4, -3, 2, -1)))
    lines = [ln for ln in text.splitlines() if " -- " in ln]
    loops = [ln for ln in lines if ln.split(" -- ")[0].strip() == ln.split(" -- ")[1].rstrip(";")]
    dashed = [ln for ln in lines if "dashed" in ln]
    assert (len(loops), len(dashed), len(lines) - len(loops) - len(dashed)) == (4, 3, 5)
    text = bio.dot_text(gamma_d((2, -3, -4, 1)))
    assert text.count(" -- ") == 14 and '"-4";' in text


def test_dot_graph_without_edges():
    assert bio.dot_text(Graph(0)) == "graph G {\n}\n"
    text = bio.dot_text(Graph(2))
    assert text == 'graph G {\n  0 [label="0"];\n  1 [label="1"];\n}\n'


def test_csv_uses_crlf(tmp_path):
    rep = degree_report(hasse("I2", m=4))
    path = tmp_path / "deg.csv"
    bio.export_csv(rep, path)
    assert path.read_bytes() == b"degree,count\r\n2,2\r\n3,4\r\n4,2\r\n"


def test_json_report(tmp_path):
    path = tmp_path / "ric.json"
    bio.export_json(global_ricci(hasse("I2", m=4)), path)
    data = json.loads(path.read_text())
    assert data["summary"]["ric"] == pytest.approx(0.5)
    assert len(data["rows"]) == 8
