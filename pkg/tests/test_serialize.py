import json

import pytest

from lefschetz.borel_smith import borel_smith_lattice
from lefschetz.errors import GroupTooLarge, ParseError
from lefschetz.intlinalg import lattice_equal
from lefschetz.serialize import (SCHEMA, AnalysisReport, build_report, function_from_text,
                                 function_to_text, group_to_text, lattice_from_text,
                                 lattice_to_text, parse_group_file, parse_group_text,
                                 render_text, sign_space_to_text)
from lefschetz.superclass import SuperclassFunction, SylowLevelFunction
from lefschetz.units import unit_space

from conftest import group, table


@pytest.mark.parametrize("text,order", [
    ("degree 3\ngen (1 2 3)", 3),
    ("degree 4\ngen (1 2 3 4)\ngen (1 3)", 8),
    ("# a comment\n\ndegree 5\ngen (1 2 3 4 5)\ngen (1 2)\n", 120),
])
def test_parse_group_text(text, order):
    assert parse_group_text(text).order == order


@pytest.mark.parametrize("text,message", [
    ("degree 3\ngen (1 2 4)", "line 2: point out of range"),
    ("degree 3\ngen (1 2", "malformed"),
    ("degree 3", "empty generator list"),
    ("gen (1 2)", "missing 'degree'"),
    ("degree 3\ndegree 4\ngen (1 2)", "degree given twice"),
    ("degree 0\ngen ()", "positive integer"),
    ("degree x\ngen ()", "positive integer"),
    ("degree 3\ngenerator (1 2)", "expected 'degree' or 'gen'"),
])
def test_parse_group_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_group_text(text)


def test_parse_respects_bound():
    with pytest.raises(GroupTooLarge):
        parse_group_text("degree 5\ngen (1 2 3 4 5)\ngen (1 2)", bound=60)


def test_group_file_round_trip(tmp_path):
    G = group("s2p_normalizer:3")
    path = tmp_path / "n72.txt"
    path.write_text(group_to_text(G))
    H = parse_group_file(path)
    assert H.order == 72 and set(H.elements) == set(G.elements)
    assert H.name == "n72"
    with pytest.raises(ParseError, match="cannot read"):
        parse_group_file(tmp_path / "missing.txt")


def test_function_text_round_trip():
    T = table("symmetric:4", 2)
    f = SuperclassFunction(T, tuple(range(len(T))))
    assert function_from_text(T, function_to_text(f)) == f
    g = SylowLevelFunction(T, tuple(range(len(T.s_reps))))
    assert function_from_text(T, function_to_text(g)) == g
    with pytest.raises(ParseError):
        function_from_text(T, "a | b\n1 2")


def test_lattice_and_sign_text():
    T = table("dihedral:8", 2)
    L = borel_smith_lattice(T, "G")
    text = lattice_to_text(L, T, "G")
    assert text.startswith("# <") and "# hnf: true" in text
    assert lattice_equal(lattice_from_text(text), L)
    with pytest.raises(ParseError):
        lattice_from_text("# nothing")
    s = sign_space_to_text(unit_space(T))
    assert len(s.splitlines()) == 6 and "-1" in s


@pytest.mark.parametrize("spec,p", [("dihedral:8", 2), ("s2p_normalizer:3", 3),
                                    ("symmetric:5", 5), ("alternating:6", 2),
                                    ("alternating:4", 2)])
def test_report_json_round_trip(spec, p):
    r = build_report(group(spec), p, table=table(spec, p))
    again = AnalysisReport.from_json(r.to_json())
    assert again == r
    assert again.to_dict()["schema"] == SCHEMA
    # every section is present, possibly marked skipped
    d = r.to_dict()
    for key in ("group", "class_table", "borel_smith", "units", "tuples", "verdict"):
        assert d[key]


def test_report_sections():
    r = build_report(group("dihedral:8"), 2)
    assert r.class_table["c"] == 5 and r.borel_smith["rank"] == 5
    assert r.units["unit_space"]["dimension"] == 5
    assert "skipped" in r.tuples and r.unit_order == 1
    r = build_report(group("s2p_normalizer:3"), 3)
    assert "skipped" in r.units and r.unit_order == 2
    assert r.tuples["order"] == 4 and r.tuples["min_generators"] == 2
    assert r.verdict["outcome"] == "Unknown"


def test_text_and_json_carry_the_same_data():
    r = build_report(group("symmetric:4"), 2)
    text = r.to_text()

    def leaves(x):
        if isinstance(x, dict):
            for v in x.values():
                yield from leaves(v)
        elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
            for v in x:
                yield from leaves(v)
        else:
            yield x
    for key, value in r.to_dict().items():
        assert f"{key}:" in text
    for leaf in leaves(r.to_dict()):
        if isinstance(leaf, list):
            assert "[" + ", ".join(str(v).lower() if isinstance(v, bool) else str(v)
                                   for v in leaf) + "]" in text
        elif isinstance(leaf, str):
            assert leaf in text


def test_schema_is_checked():
    r = build_report(group("cyclic:3"), 3)
    d = json.loads(r.to_json())
    d["schema"] = "something-else/9"
    with pytest.raises(ParseError, match="schema"):
        AnalysisReport.from_dict(d)
    with pytest.raises(ParseError, match="invalid JSON"):
        AnalysisReport.from_json("{")


def test_render_text_shapes():
    assert render_text({"a": 1, "b": [1, 2], "c": {"d": True}}) == "a: 1\nb: [1, 2]\nc:\n  d: true"
    assert render_text([{"x": None}]) == "-\n  x: none"
