import json
from fractions import Fraction

import pytest

from acmlie import catalog, fileformat
from acmlie.errors import ParseError
from acmlie.extension import central_extend, kahler_quotient
from acmlie.forms import KForm


def _doc(**extra):
    doc = {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]}
    doc.update(extra)
    return doc


def test_read_heisenberg():
    f = fileformat.from_dict(_doc())
    assert f.dim == 3 and f.L.c(0, 1) == (0, 0, 1) and f.L.c(1, 0) == (0, 0, -1)
    assert f.metric is None and f.acm is None


def test_reversed_pair_is_negated():
    f = fileformat.from_dict({"dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "1/2"}}]})
    assert f.L.c(0, 1) == (0, 0, Fraction(-1, 2))


@pytest.mark.parametrize("doc, text", [
    ({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}, {"i": 2, "j": 1, "coeffs": {"3": "1"}}]},
     "given twice"),
    (_doc(brackets=[{"i": 1, "j": 4, "coeffs": {}}]), "outside"),
    (_doc(brackets=[{"i": 1, "j": 2, "coeffs": {"3": "1/0"}}]), "zero denominator"),
    (_doc(brackets=[{"i": 1, "j": 2, "coeffs": {"3": 0.5}}]), "scalar"),
    (_doc(extra=1), "unknown keys"),
    ({"dim": 0}, "dim"),
    (_doc(metric=[["1", "0"], ["0", "1"]]), "3x3"),
    (_doc(acm={"phi": [["0"] * 3] * 3}), "phi and xi"),
    (_doc(symplectic={"1": "1"}), "index pair"),
    ([], "top level"),
])
def test_rejections(doc, text):
    with pytest.raises(ParseError, match=text):
        fileformat.from_dict(doc)


def test_invalid_json():
    with pytest.raises(ParseError, match="invalid JSON"):
        fileformat.loads("{")
    with pytest.raises(ParseError, match="cannot read"):
        fileformat.load("/nonexistent/file.json")


def test_eta_defaults_to_metric_dual():
    S = catalog.instantiate("eta_g3", {"a": 1, "b": 1, "lam": 2, "sign": 1})
    doc = fileformat.to_dict(fileformat.from_structure(S))
    del doc["acm"]["eta"]
    f = fileformat.from_dict(doc)
    assert f.acm_structure() == S


def test_parse_two_form():
    w = fileformat.parse_two_form("12:1, 34:-1/2", 4)
    assert w == KForm.from_labels(4, {"12": 1, "34": Fraction(-1, 2)})
    assert fileformat.parse_two_form('{"12": "1", "34": "-1/2"}', 4) == w
    assert fileformat.parse_two_form("21:1", 4) == KForm.from_labels(4, {"12": -1})
    for bad in ("12=1", "{", "15:1"):
        with pytest.raises(ParseError):
            fileformat.parse_two_form(bad, 4)


@pytest.mark.parametrize("name", ["sasaki_g3", "eta_g4", "table1_d4_half", "table2_rr30", "h5_double_aqs", "g0"])
def test_round_trip(name):
    obj = catalog.instantiate(name)
    text = fileformat.dumps(fileformat.from_structure(obj))
    f = fileformat.loads(text)
    assert fileformat.dumps(f) == text
    assert json.loads(text)["dim"] == f.dim


def test_round_trip_through_extension():
    D = catalog.instantiate("table2_rr30")
    text = fileformat.dumps(fileformat.from_structure(D))
    S = fileformat.loads(fileformat.dumps(fileformat.from_structure(central_extend(D).S))).acm_structure()
    assert fileformat.dumps(fileformat.from_structure(kahler_quotient(S))) == text


def test_kahler_block_without_metric():
    K = catalog.d42_kahler(1)
    doc = fileformat.to_dict(fileformat.from_structure(K))
    del doc["metric"]
    assert fileformat.from_dict(doc).kahler_structure() == K


def test_unserialisable():
    with pytest.raises(TypeError):
        fileformat.from_structure(3)
