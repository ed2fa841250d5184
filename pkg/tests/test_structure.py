import itertools

import pytest

from graphstress.closed_forms import SrgParameters, predict_srg
from graphstress.errors import Disconnected, TooSmall
from graphstress.generators import (
    cocktail_party,
    complete,
    complete_bipartite,
    cycle,
    named,
    path,
    random_connected,
    star,
    windmill,
)
from graphstress.geodesics import stress_profile
from graphstress.graph import components, from_edge_list, induced_is_clique
from graphstress.structure import (
    RecognizedFamily,
    block_cut_decomposition,
    classify,
    detect_srg,
    has_single_positive_stress_vertex,
    is_star_by_stress,
    is_unique_cutvertex_complete_blocks,
    simplicial_vertices,
    stress_regularity,
)
from graphstress.verify import enumerate_connected

from test_graph import graphs
from hypothesis import given


def test_simplicial():
    assert simplicial_vertices(complete(5)) == frozenset(range(5))
    assert simplicial_vertices(path(4)) == {0, 3}
    assert simplicial_vertices(cycle(4)) == frozenset()


def test_block_cut_examples():
    d = block_cut_decomposition(windmill(3, 2))
    assert d.cut_vertices == {0} and d.blocks == ((0, 1, 2), (0, 3, 4))
    d = block_cut_decomposition(cycle(5))
    assert d.cut_vertices == frozenset() and d.blocks == ((0, 1, 2, 3, 4),)
    d = block_cut_decomposition(path(4))
    assert d.cut_vertices == {1, 2} and len(d.blocks) == 3
    d = block_cut_decomposition(from_edge_list(3, [(0, 1)]))
    assert d.blocks == ((0, 1), (2,))


def _remove(g, v):
    keep = [u for u in range(g.n) if u != v]
    idx = {u: i for i, u in enumerate(keep)}
    return from_edge_list(len(keep), [(idx[a], idx[b]) for a, b in g.edges() if v not in (a, b)])


@given(graphs(max_n=8))
def test_block_cut_invariants(g):
    d = block_cut_decomposition(g)
    base = len(components(g))
    for v in range(g.n):
        assert (len(components(_remove(g, v))) > base) == (v in d.cut_vertices)
    for u, v in g.edges():
        assert sum(1 for b in d.blocks if u in b and v in b) == 1
    for a, b in itertools.combinations(d.blocks, 2):
        shared = set(a) & set(b)
        assert len(shared) <= 1 and shared <= d.cut_vertices
    for v in range(g.n):
        assert (sum(1 for b in d.blocks if v in b) >= 2) == (v in d.cut_vertices)


def test_unique_cutvertex():
    assert is_unique_cutvertex_complete_blocks(windmill(4, 3)) == 0
    assert is_unique_cutvertex_complete_blocks(star(5)) == 0
    assert is_unique_cutvertex_complete_blocks(cycle(5)) is None
    with pytest.raises(TooSmall):
        is_unique_cutvertex_complete_blocks(complete(2))
    with pytest.raises(Disconnected):
        is_unique_cutvertex_complete_blocks(from_edge_list(4, [(0, 1), (1, 2)]))


def test_single_positive():
    assert has_single_positive_stress_vertex(windmill(3, 2)) == 0
    assert has_single_positive_stress_vertex(path(4)) is None
    assert has_single_positive_stress_vertex(complete(5)) is None


def test_star_by_stress():
    assert is_star_by_stress(star(4))
    assert not is_star_by_stress(windmill(3, 2))
    assert is_star_by_stress(path(3))
    with pytest.raises(Disconnected):
        is_star_by_stress(from_edge_list(3, [(0, 1)]))


def test_detect_srg():
    assert detect_srg(named("PETERSEN")) == SrgParameters(10, 3, 0, 1)
    assert detect_srg(named("FIG4_OCTAHEDRON")) == SrgParameters(6, 4, 2, 4)
    assert detect_srg(named("FIG2_2SR")) is None
    assert detect_srg(complete(5)) is None
    assert detect_srg(from_edge_list(4, [])) is None
    assert detect_srg(cycle(5)) == SrgParameters(5, 2, 0, 1)
    assert detect_srg(named("FIG3_PRISM")) is None
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert detect_srg(two_triangles) == SrgParameters(6, 2, 1, 0)


def test_srg_graphs_are_stress_regular():
    corpus = [named("PETERSEN"), named("FIG4_OCTAHEDRON"), cycle(4), cycle(5), complete_bipartite(3, 3),
              from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])]
    corpus += [cocktail_party(k) for k in range(1, 6)]
    corpus += list(enumerate_connected(5))
    for g in corpus:
        p = detect_srg(g)
        if p is None:
            continue
        assert stress_regularity(g) == predict_srg(p)


def test_stress_regularity():
    assert stress_regularity(cycle(5)) == 1
    assert stress_regularity(named("FIG1_REG3")) is None
    assert stress_regularity(complete(7)) == 0


def test_classify_examples():
    r = classify(cycle(4))
    assert r.stress_regular_k == 1 and r.recognized_family is RecognizedFamily.C4
    r = classify(named("FIG3_PRISM"))
    assert r.stress_regular_k == 2 and r.recognized_family is RecognizedFamily.PRISM
    r = classify(complete(6))
    assert r.stress_regular_k == 0 and r.recognized_family is RecognizedFamily.COMPLETE
    r = classify(star(4))
    assert r.recognized_family is RecognizedFamily.STAR and r.one_stress_center == 0
    r = classify(from_edge_list(4, [(0, 1), (2, 3)]))
    assert not r.is_connected and r.recognized_family is RecognizedFamily.NONE
    assert r.findings == []


def test_classify_finds_no_disagreements_on_small_graphs():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert classify(g).findings == []
    for seed in range(40):
        assert classify(random_connected(9, seed)).findings == []


def test_stress_regular_graphs_have_nontrivial_eccentricity():
    from graphstress.graph import eccentricity
    for n in range(2, 7):
        for g in enumerate_connected(n):
            k = stress_regularity(g)
            if k:
                assert min(eccentricity(g, v) for v in range(n)) >= 2
