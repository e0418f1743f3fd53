import math
import random
from itertools import combinations_with_replacement

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from tuttetheta.errors import CapExceeded
from tuttetheta.graphs import (
    Multigraph,
    automorphism_count,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_isomorphic,
    isomorphisms,
    join,
    path_graph,
    star_graph,
    subdivide_edge,
)
from tuttetheta.pipeline import enumerate_graphs


def to_nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    return h


graphs = st.builds(lambda seed: random_graph(random.Random(seed), 6, 8, loops=True),
                   st.integers(0, 10 ** 6))


def test_edges_are_normalised():
    g = Multigraph(3, ((2, 0), (1, 1), (0, 2)))
    assert g.edges == ((0, 2), (0, 2), (1, 1))
    assert g.degrees() == [2, 2, 2]
    assert g.loops() == [0, 1, 0]
    assert not g.is_simple()


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        Multigraph(-1, ())


def test_constructors():
    assert path_graph(3).n_vertices == 4 and path_graph(3).n_edges == 3
    assert complete_graph(5).n_edges == 10
    assert star_graph(3).degrees() == [3, 1, 1, 1]
    assert cycle_graph(1).edges == ((0, 0),)
    assert empty_graph(4).isolated_vertices() == [0, 1, 2, 3]
    j = join(path_graph(1), empty_graph(2))
    assert j.n_vertices == 4 and j.n_edges == 1 + 4


def test_subdivision():
    g = subdivide_edge(complete_graph(3), (2, 0), 2)
    assert g.n_vertices == 5 and g.n_edges == 5
    assert is_isomorphic(g, cycle_graph(5))
    assert subdivide_edge(complete_graph(3), (0, 1), 0) == complete_graph(3)
    with pytest.raises(ValueError):
        subdivide_edge(path_graph(2), (0, 2), 1)


def test_components_and_connectivity():
    g = disjoint_union(complete_graph(3), path_graph(1))
    assert sorted(map(sorted, g.components())) == [[0, 1, 2], [3, 4]]
    assert not g.is_connected()
    assert complete_graph(4).is_biconnected()
    assert not path_graph(2).is_biconnected()
    assert g.without_isolated() == g
    assert g.add_vertices(2).without_isolated().n_vertices == 5


def test_automorphism_counts():
    assert automorphism_count(complete_graph(5)) == math.factorial(5)
    assert automorphism_count(cycle_graph(6)) == 12
    assert automorphism_count(star_graph(4)) == 24
    assert automorphism_count(Multigraph(2, ((0, 1), (0, 1)))) == 2
    assert automorphism_count(empty_graph(0)) == 1


def test_isomorphism_cap():
    with pytest.raises(CapExceeded):
        is_isomorphic(empty_graph(11), empty_graph(11), cap=10)
    assert is_isomorphic(empty_graph(11), empty_graph(11), cap=None)


@given(graphs, st.randoms(use_true_random=False))
@settings(max_examples=80)
def test_relabelling_preserves_isomorphism_class(g, r):
    perm = list(range(g.n_vertices))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert is_isomorphic(g, h)
    for f in isomorphisms(g, h):
        assert sorted(tuple(sorted((f[u], f[v]))) for u, v in g.edges) == list(h.edges)
        break


@given(graphs, graphs)
@settings(max_examples=150)
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_enumeration_counts_match_atlas():
    atlas = nx.graph_atlas_g()
    for nv in range(0, 7):
        ours = enumerate_graphs(nv, nv * (nv - 1) // 2)
        theirs = [a for a in atlas if a.number_of_nodes() == nv]
        assert len(ours) == len(theirs)
        if nv:
            assert sum(g.is_connected() for g in ours) == sum(nx.is_connected(a) for a in theirs)
    assert len(enumerate_graphs(7, 21)) == 1044


def test_multigraph_enumeration_matches_brute_force():
    pairs = [(u, v) for u in range(3) for v in range(u, 3)]
    for k in range(4):
        reps: list = []
        for edges in combinations_with_replacement(pairs, k):
            h = to_nx(Multigraph(3, edges))
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
        ours = [g for g in enumerate_graphs(3, 3, multigraph=True, loops=True) if g.n_edges == k]
        assert len(ours) == len(reps)
