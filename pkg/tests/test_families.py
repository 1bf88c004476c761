import pytest

from findex import families as fam
from findex.families import (FamilyParamError, FamilySyntaxError, UnknownFamilyError, build,
                             closed_form_f, discrepancy, identify_all, parse_spec, printed_f,
                             spec)
from findex.graph import girth, is_unicyclic
from findex.indices import f_index


def test_text_form_roundtrip():
    s = parse_spec("Gk1(n=9,k=3)")
    assert s == spec("Gk1", 9, 3) and str(s) == "Gk1(n=9,k=3)"
    assert parse_spec(" Rijkl( 1, 0, 2, 3 ) ") == spec("Rijkl", 1, 0, 2, 3)
    assert parse_spec("Rkl(l=1)", partial=True) == ("Rkl", {"l": 1})


@pytest.mark.parametrize("text,exc", [
    ("Foo(n=3)", UnknownFamilyError),
    ("Gk1(n=9)", FamilySyntaxError),
    ("Gk1(n=9,k=x)", FamilySyntaxError),
    ("Gk1 n=9", FamilySyntaxError),
    ("Gk1(n=9,q=3)", FamilySyntaxError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc) as info:
        parse_spec(text)
    assert "Gk1(n,k)" in str(info.value) or "integer" in str(info.value)


@pytest.mark.parametrize("s,what", [
    (spec("Gk1", 3, 5), "n - k >= 1"),
    (spec("Gk2", 5, 4), "n - k >= 2"),
    (spec("Rkl", 0, 3), "k >= 1"),
    (spec("Lollipop", 5, 5), "k <= n - 1"),
    (spec("Cycle", 80), "n <= 64"),
])
def test_invalid_parameters_name_constraint(s, what):
    with pytest.raises(FamilyParamError, match=what.replace("+", r"\+")):
        build(s)


def test_known_values():
    assert f_index(build(spec("Gk1", 5, 3))) == 82
    assert [closed_form_f(spec(t, 9)) for t in ("G33", "G34")] == [294, 276]
    assert closed_form_f(spec("Rkl", 5, 1)) == closed_form_f(spec("Gk1", 9, 4)) == 372
    assert closed_form_f(spec("Gk2", 9, 3)) == 384


@pytest.mark.parametrize("n", range(3, 21))
def test_constructions_and_closed_forms(n):
    for s in fam.candidates(n):
        g = build(s)
        assert g.n == n and is_unicyclic(g), s
        assert f_index(g) == closed_form_f(s), s
    for s in (spec("Path", n), spec("Star", n)):
        assert f_index(build(s)) == closed_form_f(s)


@pytest.mark.parametrize("n", range(6, 15))
def test_girths(n):
    assert girth(build(spec("Gk1", n, 5))) == 5
    assert girth(build(spec("Lollipop", n, n - 1))) == n - 1
    for t in ("G33", "G34"):
        assert girth(build(spec(t, n))) == 3
    for t in ("G43", "G41prime"):
        assert girth(build(spec(t, n))) == 4


@pytest.mark.parametrize("n", range(5, 31))
def test_printed_forms_where_they_agree(n):
    assert printed_f(spec("Gk2", n, 3)) == closed_form_f(spec("Gk2", n, 3))
    assert printed_f(spec("Gk1", n, 4)) == closed_form_f(spec("Gk1", n, 4))
    assert printed_f(spec("Rkl", n - 4, 1)) == closed_form_f(spec("Rkl", n - 4, 1))
    assert printed_f(spec("Gk2", n, 4)) is None


@pytest.mark.parametrize("n", range(6, 31))
def test_discrepancies_flagged(n):
    assert discrepancy(spec("G33", n)).printed - discrepancy(spec("G33", n)).derived == 1
    assert discrepancy(spec("G34", n)).printed - discrepancy(spec("G34", n)).derived == 1
    d = discrepancy(spec("Lollipop", n, 3))
    assert (d.derived, d.printed) == (8 * n + 12, 8 * n + 14)
    assert d.as_dict()["kind"] == "constant-discrepancy"
    assert discrepancy(spec("G43", n)) is None
    assert discrepancy(spec("Gk1", n, 3)) is None


def test_identify_collapsed_names_at_six():
    names = {str(s) for s in identify_all(build(spec("Gk2", 6, 3)))}
    assert names == {"Gk2(n=6,k=3)", "Spqr(p=2,q=1,r=0)", "G33(n=6)"}
    assert fam.identify(build(spec("G33", 9))) == spec("Spqr", 4, 2, 0)


def test_rkl_is_rijkl_with_zero_arms():
    assert build(spec("Rkl", 3, 2)) == build(spec("Rijkl", 0, 0, 3, 2))
