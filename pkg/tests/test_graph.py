import itertools

import pytest

from findex.graph import (GraphError, cycle_graph, cycle_of, degree_sequence, girth,
                          is_connected, is_unicyclic, make_graph, path_graph, star_graph,
                          two_core)

import oracles


def test_make_graph_dedupes_and_sorts():
    g = make_graph(4, [(1, 0), (0, 1), (2, 3), (3, 2), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degrees == (1, 2, 2, 1)


@pytest.mark.parametrize("n,edges", [(3, [(0, 0)]), (3, [(0, 3)]), (0, []), (65, [])])
def test_make_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        make_graph(n, edges)


def test_small_constructors():
    assert degree_sequence(cycle_graph(5)) == (2, 2, 2, 2, 2)
    assert degree_sequence(path_graph(4)) == (2, 2, 1, 1)
    assert star_graph(5).degree(0) == 4


def test_unicyclic_examples():
    assert is_unicyclic(cycle_graph(5))
    assert not is_unicyclic(path_graph(5))
    two_triangles = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two_triangles) and not is_unicyclic(two_triangles)


def test_cycle_of_lollipop():
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)])
    assert sorted(cycle_of(g)) == [0, 1, 2, 3]
    assert two_core(g) == {0, 1, 2, 3}
    assert girth(g) == 4


def test_girth_rejects_trees():
    with pytest.raises(GraphError):
        girth(path_graph(4))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_unicyclic_matches_oracle_on_all_edge_sets(n):
    pairs = list(itertools.combinations(range(n), 2))
    for es in itertools.combinations(pairs, n):
        g = make_graph(n, es)
        assert is_unicyclic(g) == oracles.connected(n, es)
        if is_unicyclic(g):
            assert girth(g) == oracles.cycle_length(n, es)


def test_relabel_and_rewire():
    g = path_graph(3)
    h = g.relabel([2, 1, 0])
    assert h.edges() == [(0, 1), (1, 2)]
    assert g.rewire(remove=[(0, 1)], add=[(0, 2)]).edges() == [(0, 2), (1, 2)]
