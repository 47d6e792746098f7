import pytest

from defcolor import fixtures as fx
from defcolor.coloring import Coloring
from defcolor.embedding import AsymmetricError, GirthTooSmallError
from defcolor.generate import gen_planar_girth5
from defcolor.graphio import (ParseError, parse_coloring, parse_graph,
                              serialize_coloring, serialize_graph)


def test_round_trip_c5():
    g = fx.c5()
    doc = serialize_graph(g)
    back = parse_graph(doc)
    assert back.rotation == g.rotation
    assert serialize_graph(back) == doc


def test_round_trip_preserves_rotation_order_and_twists():
    g = fx.petersen_projective()
    doc = serialize_graph(g)
    back = parse_graph(doc)
    assert back.rotation == g.rotation
    assert back.twists == g.twists
    assert serialize_graph(back) == doc
    assert back.genus == 1


def test_round_trip_generated():
    for seed in range(6):
        g = gen_planar_girth5(seed, 30 + 8 * seed)
        assert parse_graph(serialize_graph(g)).rotation == g.rotation


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("graph x y\n")
    with pytest.raises(ParseError):
        parse_graph("graph 2 1\n0: 1\n")  # truncated: vertex 1 missing
    with pytest.raises(ParseError):
        parse_graph("graph 2 2\n0: 1\n1: 0\n")  # wrong edge count
    err = None
    try:
        parse_graph("graph 2 1\n0: 1\nbogus\n1: 0\n")
    except ParseError as exc:
        err = exc
    assert err is not None and err.line == 3


def test_build_errors_surface():
    with pytest.raises(AsymmetricError):
        parse_graph("graph 2 1\n0: 1\n1:\n")


def test_girth5_flag_checked():
    doc = "graph 4 4 girth5\n0: 1 3\n1: 0 2\n2: 1 3\n3: 2 0\n"
    with pytest.raises(GirthTooSmallError):
        parse_graph(doc)
    ok = parse_graph(serialize_graph(fx.c5(), declare_girth5=True))
    assert ok.n == 5


def test_coloring_round_trip():
    col = Coloring((0, 1, 1, 0, 1), (1, 10))
    doc = serialize_coloring(col)
    back = parse_coloring(doc)
    assert back.assignment == col.assignment
    assert back.defects == col.defects
    assert serialize_coloring(back) == doc


def test_coloring_parse_errors():
    with pytest.raises(ParseError):
        parse_coloring("coloring 2 defects 1,10\n0 1\n")  # vertex 1 missing
    with pytest.raises(ParseError):
        parse_coloring("coloring 1 defects 1,10\n0 3\n")  # class out of range
