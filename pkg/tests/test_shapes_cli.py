import json
from fractions import Fraction as F

import pytest
from conftest import polygons
from hypothesis import given, settings

from illumcover.cli import main
from illumcover.covering import EpsSpec, quantified_count
from illumcover.field import FieldElement, ParseError
from illumcover.nd import Box, DoubleCone
from illumcover.shapes import (
    Disc,
    certificate_from_doc,
    certificate_to_doc,
    parse_shape,
    regular_ngon,
    serialize_shape,
)
from illumcover.svg import render_svg

HEXAGON = '{"kind": "regular_ngon", "n": 6, "circumradius": "1"}'
TRIANGLE = '{"kind": "polygon", "vertices": [["0", "0"], ["4", "0"], ["0", "3"]]}'
SQUARE = '{"kind": "polygon", "vertices": [["-1", "-1"], ["1", "-1"], ["1", "1"], ["-1", "1"]]}'
RECT = '{"kind": "polygon", "vertices": [["0", "0"], ["4", "0"], ["4", "2"], ["0", "2"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hexagon_shape():
    K = parse_shape(HEXAGON)
    assert len(K.vertices) == 6
    assert any(isinstance(c, FieldElement) for v in K.vertices for c in v)
    assert all(v[0] * v[0] + v[1] * v[1] == 1 for v in K.vertices)


def test_triangle_and_malformed():
    assert parse_shape(TRIANGLE).vertices == ((0, 0), (4, 0), (0, 3))
    with pytest.raises(ParseError, match="vertices"):
        parse_shape('{"kind": "polygon", "vertices": [["1/0", "0"], ["1", "0"], ["0", "1"]]}')
    with pytest.raises(ParseError, match="unknown field"):
        parse_shape('{"kind": "disc", "radius": "1", "colour": "red"}')
    with pytest.raises(ParseError, match="line 1"):
        parse_shape('{"kind": ')
    with pytest.raises(ParseError, match="strings"):
        parse_shape('{"kind": "polygon", "vertices": [[0, 0], [1, 0], [0, 1]]}')
    with pytest.raises(ParseError, match="kind"):
        parse_shape('{"kind": "blob"}')


@pytest.mark.parametrize("body", [
    regular_ngon(6), regular_ngon(4, 2), regular_ngon(7, F(1, 2)), Disc(F(3, 2)), Box(3, (1, 2, F(1, 3))),
    DoubleCone(4),
])
def test_round_trip_corpus(body):
    assert parse_shape(serialize_shape(body)) == body


@settings(max_examples=40, deadline=None)
@given(polygons())
def test_round_trip_polygons(K):
    assert parse_shape(serialize_shape(K)) == K


def test_certificate_round_trip_with_surds():
    K = parse_shape(RECT)
    eps = EpsSpec.circumradius(F(9, 10))
    res = quantified_count(K, eps, "closed")
    doc = json.loads(json.dumps(certificate_to_doc(K, eps, "closed", res)))
    body, eps2, mode, res2 = certificate_from_doc(doc)
    assert (body, eps2, mode) == (K, eps, "closed")
    assert res2.m == res.m
    assert [tuple(float(c) for c in t) for t in res2.certificate] == \
           [tuple(float(c) for c in t) for t in res.certificate]


def test_cli_numbers_square(capsys):
    code, out, _ = run(capsys, "--json", "numbers", SQUARE)
    rep = json.loads(out)
    assert code == 0
    assert (rep["i"], rep["c"], rep["t"]) == (2, 4, [2, 2])
    assert rep["report_version"] == "1"


def test_cli_finiteness_triangle(capsys):
    code, out, _ = run(capsys, "--json", "finiteness", TRIANGLE)
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] is False
    assert len(rep["gap_direction"]) == 2
    code, out, _ = run(capsys, "finiteness", TRIANGLE)
    assert "finite at R: false" in out


def test_cli_circumball(capsys):
    code, out, _ = run(capsys, "--json", "circumball", TRIANGLE)
    rep = json.loads(out)
    assert rep["center"] == ["2", "3/2"] and rep["radius_sq"] == "25/4"


def test_cli_quantified_and_verify(tmp_path, capsys):
    cert = tmp_path / "hex.json"
    code, out, _ = run(capsys, "quantified", HEXAGON, "--eps", "R", "--cert", str(cert))
    assert code == 0 and out.startswith("Finite(3)")
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 0 and "verified" in out


def test_cli_verify_rejects_perturbed_certificate(tmp_path, capsys):
    cert = tmp_path / "rect.json"
    run(capsys, "quantified", RECT, "--eps", "1", "--cert", str(cert))
    doc = json.loads(cert.read_text())
    assert doc["verdict"] == "finite"
    x = F(doc["translations"][0][0])
    doc["translations"][0][0] = str(x + F(1, 10**6))
    cert.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 1 and "REJECTED" in out


def test_cli_infinite_report(capsys):
    code, out, _ = run(capsys, "--json", "quantified", SQUARE, "--eps", "R", "--mode", "open")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "infinite" and rep["witness"] == ["0", "0"]


def test_cli_disc(capsys):
    code, out, _ = run(capsys, "quantified", '{"kind": "disc", "radius": "1"}', "--eps", "3/2")
    assert code == 0 and out.startswith("Infinite")


def test_cli_usage_errors(capsys):
    code, _, err = run(capsys, "numbers", '{"kind": "polygon", "vertices": []}')
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "quantified", SQUARE, "--eps", "abc")
    assert code == 2
    code, _, err = run(capsys, "numbers", "/nonexistent/shape.json")
    assert code == 2
    code, _, err = run(capsys, "numbers", '{"kind": "disc", "radius": "1"}')
    assert code == 2


def test_cli_svg_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        code, _, _ = run(capsys, "svg", RECT, "--out", str(p), "--eps", "R", "--title", "Rectangle & friends")
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.count('stroke-dasharray="1,2"') == 4
    assert 'stroke-dasharray="1,5"' in text
    assert "Rectangle &amp; friends" in text


def test_svg_without_translates():
    svg = render_svg(parse_shape(TRIANGLE))
    assert svg.startswith("<?xml") and "1,2" not in svg


def test_cli_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") >= 4 and "FAIL" not in out


def test_cli_selftest_with_seed(capsys):
    code, out, _ = run(capsys, "--json", "--seed", "7", "selftest")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert rep["checks"]["sampling oracle agrees on the hexagon cover"]
