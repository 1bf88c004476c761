import io

import pytest
from hypothesis import given, settings, strategies as st

from findex.graph import cycle_graph, make_graph, path_graph
from findex.graph6 import Graph6Error, decode_graph6, encode_graph6, read_graph6, write_graph6


def test_known_strings():
    # standard examples from the format description
    assert encode_graph6(cycle_graph(5)) == "Dhc"
    assert encode_graph6(make_graph(1, [])) == "@"
    assert encode_graph6(path_graph(2)) == "A_"


@st.composite
def graphs(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=80)) if pairs else []
    return make_graph(n, chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_roundtrip(g):
    assert decode_graph6(encode_graph6(g)) == g


def test_large_n_header():
    g = cycle_graph(64)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D", "Dh", "Dhc~", "D\x7fc", "Dhcc", "~??~"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_header_and_stream():
    assert decode_graph6(">>graph6<<Dhc") == cycle_graph(5)
    buf = io.StringIO()
    write_graph6(buf, [cycle_graph(3), path_graph(4)])
    buf.seek(0)
    assert list(read_graph6(buf)) == [cycle_graph(3), path_graph(4)]
