import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphstress.canonical import canonical_form, canonical_graph, is_isomorphic
from graphstress.errors import TooLarge
from graphstress.generators import cocktail_party, complete, cycle, path, power, random_connected
from graphstress.graph import from_edge_list

from test_graph import graphs


def test_examples():
    c4 = cycle(4)
    assert canonical_form(c4) == canonical_form(c4.relabel([0, 2, 1, 3]))
    assert canonical_form(path(3)) != canonical_form(complete(3))
    assert canonical_form(power(cycle(6), 2)) == canonical_form(cocktail_party(2))


def test_too_large():
    with pytest.raises(TooLarge):
        canonical_form(cycle(9))


def test_canonical_graph_is_isomorphic_relabelling():
    g = random_connected(7, 11)
    h = canonical_graph(g)
    assert h.num_edges == g.num_edges and sorted(h.degrees()) == sorted(g.degrees())


@settings(max_examples=200)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_relabelling_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@settings(max_examples=200)
@given(graphs(max_n=7), graphs(max_n=7))
def test_degree_sequence_separates(a, b):
    if sorted(a.degrees()) != sorted(b.degrees()) or a.n != b.n:
        assert canonical_form(a) != canonical_form(b)


def _brute_isomorphic(a, b):
    from itertools import permutations
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    eb = set(b.edges())
    return any(
        all(tuple(sorted((p[u], p[v]))) in eb for u, v in a.edges()) for p in permutations(range(a.n))
    )


@settings(max_examples=150)
@given(graphs(max_n=6), graphs(max_n=6))
def test_matches_brute_force_isomorphism(a, b):
    assert is_isomorphic(a, b) == _brute_isomorphic(a, b)
