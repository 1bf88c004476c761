import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from findex import _canon_py, canon
from findex.canon import canonical_certificate, canonical_form, is_isomorphic
from findex.graph import cycle_graph, make_graph, star_graph
from findex.graph6 import decode_graph6

import oracles

try:
    from findex import _canon_c
except ImportError:  # extension not built
    _canon_c = None

needs_ext = pytest.mark.skipif(_canon_c is None, reason="compiled kernel not built")


def _edges(g):
    return [tuple(e) for e in g.edges()]


def test_two_unicyclic_graphs_on_four_vertices_differ():
    c4 = cycle_graph(4)
    paw = make_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert canonical_certificate(c4) != canonical_certificate(paw)
    assert oracles.brute_canon(4, _edges(c4)) != oracles.brute_canon(4, _edges(paw))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_certificates_separate_oracle_classes(n):
    reps = oracles.unlabeled_unicyclic(n)
    certs = {canonical_certificate(make_graph(n, g)) for g in reps}
    assert len(certs) == len(reps)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_certificate_equality_matches_brute_force(n):
    rng = random.Random(n)
    graphs = [make_graph(n, g) for g in oracles.labeled_unicyclic(n)]
    sample = rng.sample(graphs, min(60, len(graphs)))
    keyed = [(oracles.brute_canon(n, _edges(g)), canonical_certificate(g)) for g in sample]
    for (b1, c1), (b2, c2) in itertools.combinations(keyed, 2):
        assert (c1 == c2) == (b1 == b2)


@st.composite
def relabeled(draw):
    n = draw(st.integers(1, 14))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    es = draw(st.lists(st.sampled_from(pairs), max_size=30)) if pairs else []
    perm = draw(st.permutations(range(n)))
    g = make_graph(n, es)
    return g, g.relabel(perm)


@settings(max_examples=300, deadline=None)
@given(relabeled())
def test_relabel_invariance(pair):
    g, h = pair
    assert canonical_certificate(g) == canonical_certificate(h)
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)


@settings(max_examples=150, deadline=None)
@given(relabeled())
def test_python_kernel_invariance(pair):
    g, h = pair
    assert canonical_certificate(g, _canon_py) == canonical_certificate(h, _canon_py)


@needs_ext
@settings(max_examples=300, deadline=None)
@given(relabeled())
def test_backends_agree(pair):
    g, _ = pair
    assert canonical_certificate(g, _canon_py) == canonical_certificate(g, _canon_c)


def test_certificate_is_canonical_graph6():
    g = star_graph(7).relabel([3, 0, 1, 2, 4, 5, 6])
    cert = canonical_certificate(g)
    assert canonical_certificate(decode_graph6(cert.decode())) == cert


def test_highly_symmetric_graphs():
    # twins and large orbits exercise the pruning
    for g in (cycle_graph(40), star_graph(40), cycle_graph(64)):
        assert canonical_certificate(g) == canonical_certificate(g.relabel(
            random.Random(1).sample(range(g.n), g.n)))


def test_backend_flag():
    assert canon.BACKEND in ("cython", "python")
