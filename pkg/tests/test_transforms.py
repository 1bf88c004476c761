import pytest

from findex.canon import canonical_certificate
from findex.catalog import get_catalog
from findex.families import build, spec
from findex.graph import cycle_graph, is_unicyclic, make_graph, path_graph, star_graph
from findex.indices import f_index
from findex.transforms import (Kind, StaleSiteError, TransformError, applicable_sites, apply,
                               apply_b, make_site, normalization_path, normalize_to_star_cycle,
                               parse_kind, parse_site)


def cert(g):
    return canonical_certificate(g)


def test_site_text_roundtrip():
    s = make_site(Kind.D, u=0, u1=5, v=2)
    assert str(s) == "D:u=0,u1=5,v=2"
    assert parse_site(str(s)) == s
    assert parse_site("v=4,u=0", Kind.A) == make_site(Kind.A, v=4, u=0)
    assert parse_kind("EdgeSlide") is Kind.SLIDE and parse_kind("slide") is Kind.SLIDE
    with pytest.raises(TransformError):
        parse_site("A:v=x")
    with pytest.raises(TransformError):
        parse_kind("Z")


def test_no_sites():
    assert applicable_sites(cycle_graph(6), Kind.A) == []
    assert applicable_sites(build(spec("Lollipop", 7, 3)), Kind.C) == []
    # the neighbor leaf of Gk2 hangs off a cycle vertex, so A has nothing to pull in
    assert applicable_sites(build(spec("Gk2", 6, 3)), Kind.A) == []


def test_a_pulls_leaves_onto_cycle():
    # triangle 0,1,2; v=3 pendant to 0 with leaves 4,5
    g = make_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)])
    (site,) = applicable_sites(g, Kind.A)
    assert (site["v"], site["u"]) == (3, 0)
    o = apply(g, site)
    assert (o.f_before, o.f_after, o.predicted_delta) == (72, 144, 72)


def test_c_reattaches_arm():
    g = build(spec("Gk1", 5, 3))
    site = applicable_sites(g, Kind.C)[0]
    o = apply(g, site)
    assert (o.f_before, o.f_after, o.predicted_delta) == (82, 52, -30)
    assert cert(o.result) == cert(build(spec("Lollipop", 5, 3)))


def test_e_makes_lollipop():
    g = build(spec("Gk1", 6, 3))
    (site,) = applicable_sites(g, Kind.E)
    o = apply(g, site)
    assert (o.f_before, o.f_after, o.measured_delta, o.predicted_delta) == (144, 60, -84, -84)
    assert cert(o.result) == cert(build(spec("Lollipop", 6, 3)))


def test_e_identity_at_one_leaf():
    g = build(spec("Gk1", 5, 4))
    o = apply(g, applicable_sites(g, Kind.E)[0])
    assert o.measured_delta == 0 and o.result == g


def test_f_needs_three_leaves():
    assert applicable_sites(build(spec("Gk1", 6, 4)), Kind.F) == []
    sites = applicable_sites(build(spec("Gk1", 8, 3)), Kind.F)
    assert [(s["s"], s["t"]) for s in sites] == [(1, 4), (2, 3)]


def test_b_examples():
    g = build(spec("Spqr", 2, 1, 0))  # vertex 0 has degree 4, vertex 1 degree 3
    to_1, to_0 = apply_b(g, 0, 1)
    assert to_0.f_after == 144 and to_0.f_before == 102
    assert max(to_0.measured_delta, to_1.measured_delta) > 0
    g = build(spec("Spqr", 1, 1, 1))
    a, b = apply_b(g, 0, 1)
    assert a.measured_delta > 0 and b.measured_delta > 0
    assert a.f_after == 102
    with pytest.raises(TransformError):
        apply_b(g, 0, 3)


def test_stale_site_rejected():
    g = build(spec("Gk1", 6, 3))
    with pytest.raises(StaleSiteError):
        apply(g, make_site(Kind.A, v=1, u=0))


def test_unicyclic_only_kinds():
    with pytest.raises(TransformError):
        applicable_sites(path_graph(5), Kind.E)
    assert applicable_sites(star_graph(4), Kind.C) != []


def test_normalization_examples():
    assert cert(normalize_to_star_cycle(build(spec("Lollipop", 7, 3)))) == \
        cert(build(spec("Gk1", 7, 3)))
    g = build(spec("Gk1", 8, 3))
    assert normalization_path(g) == [] and normalize_to_star_cycle(g) == g
    steps = normalization_path(build(spec("Spqr", 1, 1, 1)))
    assert [s.kind for s in (x.site for x in steps)] == [Kind.B, Kind.B]
    assert steps[0].f_before == 84 and steps[-1].f_after == 144


@pytest.mark.parametrize("n", range(4, 9))
def test_every_site_delta_exact(n):
    for m in get_catalog(n).members:
        for kind in Kind:
            for site in applicable_sites(m.graph, kind):
                o = apply(m.graph, site)
                assert o.predicted_delta == o.measured_delta, (m.graph6, str(site))
                assert o.result.n == n and is_unicyclic(o.result)


@pytest.mark.parametrize("n", range(3, 11))
def test_normalization_reaches_star_cycle(n):
    for m in get_catalog(n).members:
        steps = normalization_path(m.graph)
        assert len(steps) <= n
        assert all(s.measured_delta > 0 for s in steps)
        target = spec("Gk1", n, m.girth) if m.girth < n else spec("Cycle", n)
        assert cert(normalize_to_star_cycle(m.graph)) == cert(build(target))
        assert f_index(normalize_to_star_cycle(m.graph)) >= m.f
