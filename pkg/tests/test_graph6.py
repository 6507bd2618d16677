import pytest
from hypothesis import given, settings, strategies as st

from alontarsi.graph import Graph, complete_graph, cycle_graph
from alontarsi.graph6 import Graph6Error, emit_graph6, pair_from_json, pair_to_json, parse_graph6
from alontarsi.graph import LabeledPair


def test_known_strings():
    assert emit_graph6(complete_graph(4)) == "C~"
    assert emit_graph6(Graph(0)) == "?"
    assert emit_graph6(cycle_graph(5)) == "Dhc"
    assert parse_graph6("C~") == complete_graph(4)


def test_large_header_roundtrip():
    g = Graph(70, [(i, i + 1) for i in range(69)])
    s = emit_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("text,offset", [
    ("C~~", 2),      # trailing data
    ("C", 1),        # too few data bytes
    ("C\x10", 1),    # byte below the printable range
    ("~", 1),        # truncated long header
    ("A`", 1),       # padding bit set
])
def test_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset


def test_pair_json_roundtrip():
    p = LabeledPair.marked(cycle_graph(5), 3)
    assert pair_from_json(pair_to_json(p)) == p
