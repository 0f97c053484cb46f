import pytest

from bierfan import classify_bier, enumerate_complexes
from bierfan.classify import facet_key, orientability_survey
from bierfan.errors import EnumerationBoundError
from bierfan.simplicial import from_facets, simplex_boundary


def down_sets_by_filter(m):
    """Every family of subsets of [m] containing the empty set, closed downward, but not 2^[m]."""
    n = 1 << m
    out = []
    for family in range(1 << n):
        if not family & 1 or family == (1 << n) - 1:
            continue
        members = [s for s in range(n) if family >> s & 1]
        if all(family >> (s & ~(1 << b)) & 1 for s in members for b in range(m) if s >> b & 1):
            out.append(frozenset(members))
    return out


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 4), (3, 18), (4, 166)])
def test_enumeration_counts_match_filter(m, expected):
    got = [K.faces for K in enumerate_complexes(m)]
    assert len(got) == len(set(got)) == expected
    if m <= 3:
        assert set(got) == set(down_sets_by_filter(m))


def test_enumeration_m4_matches_filter():
    got = {K.faces for K in enumerate_complexes(4)}
    assert got == set(down_sets_by_filter(4))


def test_enumeration_m5_count():
    # Dedekind number M(5) = 7581, minus the empty family and the simplex
    assert sum(1 for _ in enumerate_complexes(5)) == 7579


def test_enumeration_order_is_lexicographic():
    keys = [facet_key(K) for K in enumerate_complexes(4)]
    assert keys == sorted(keys)
    assert keys == [facet_key(K) for K in enumerate_complexes(4)]


def test_enumeration_bounds():
    with pytest.raises(EnumerationBoundError):
        list(enumerate_complexes(6))
    with pytest.raises(EnumerationBoundError):
        list(enumerate_complexes(0))
    with pytest.raises(EnumerationBoundError):
        classify_bier(5)


def test_classify_m2_single_class():
    rep = classify_bier(2)
    assert rep.total_complexes == 4
    assert len(rep.classes) == 1
    assert rep.classes[0].canonical == simplex_boundary(2)


def test_classify_m3_cycles():
    rep = classify_bier(3)
    assert rep.total_complexes == 18
    assert sum(c.multiplicity for c in rep.classes) == 18
    assert [c.n_vertices for c in rep.classes] == [3, 4, 5, 6]
    for c in rep.classes:
        p = c.n_vertices
        cycle = from_facets(p, [[i, i % p + 1] for i in range(1, p + 1)])
        from bierfan import canonical_form

        assert c.canonical == canonical_form(cycle)
        assert c.regular and c.complete


def test_classify_dedupe_and_determinism():
    a = classify_bier(3, check_fans=False)
    b = classify_bier(3, check_fans=False)
    assert a == b
    d = classify_bier(3, check_fans=False, dedupe=True)
    assert len(d.classes) == 4
    assert d.total_complexes < a.total_complexes
    assert a.to_json()["classes"][0]["regular"] is None


def test_classify_m4_vertex_range():
    rep = classify_bier(4, check_fans=False)
    assert len({c.canonical for c in rep.classes}) == len(rep.classes)
    assert all(4 <= c.n_vertices <= 8 for c in rep.classes)
    assert sum(c.multiplicity for c in rep.classes) == rep.total_complexes == 166


def test_orientability_survey_m3():
    cases = orientability_survey(3)
    assert len(cases) == 18
    mism = [c for c in cases if not c.verdict.matches]
    assert all(c.both_ghost for c in mism)
    assert from_facets(3, [[1, 2]]) in [c.source for c in mism]
