import random

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, random_rows
from tuttetheta import matroids
from tuttetheta.errors import CapExceeded
from tuttetheta.graphs import Multigraph, complete_graph, cycle_graph, path_graph
from tuttetheta.poly import Poly, bivariate

small_graphs = st.builds(lambda seed: random_graph(random.Random(seed), 6, 8, loops=True),
                         st.integers(0, 10 ** 6))
small_rows = st.builds(lambda seed: random_rows(random.Random(seed), 9, 5),
                       st.integers(0, 10 ** 6))


def _masks(size):
    return range(1 << size)


def check_rank_axioms(m):
    r = [m.rank(a) for a in _masks(m.size)]
    for a in _masks(m.size):
        assert 0 <= r[a] <= bin(a).count("1")
        for e in range(m.size):
            b = a | (1 << e)
            assert r[a] <= r[b] <= r[a] + 1
    # submodularity on a sample of pairs
    rng = random.Random(0)
    for _ in range(200):
        a, b = rng.randrange(1 << m.size), rng.randrange(1 << m.size)
        assert r[a | b] + r[a & b] <= r[a] + r[b]


@given(small_graphs)
@settings(max_examples=40, deadline=None)
def test_graphic_rank_axioms(g):
    check_rank_axioms(matroids.graphic_matroid(g))


@given(small_rows)
@settings(max_examples=40, deadline=None)
def test_binary_rank_axioms(rows):
    check_rank_axioms(matroids.vector_matroid_f2(rows))


@given(small_rows)
@settings(max_examples=40, deadline=None)
def test_binary_rank_matches_row_reduction(rows):
    m = matroids.vector_matroid_f2(rows)
    assert m.full_rank() == _rank_gf2(rows)


def _rank_gf2(rows):
    vecs = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    while vecs:
        pivot = max(vecs)
        vecs.remove(pivot)
        if pivot == 0:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        vecs = [v ^ pivot if v >> top & 1 else v for v in vecs]
    return rank


@given(small_graphs)
@settings(max_examples=40, deadline=None)
def test_graphic_equals_incidence_matroid(g):
    a, b = matroids.graphic_matroid(g), matroids.incidence_matroid(g)
    assert a.size == b.size
    assert all(a.rank(s) == b.rank(s) for s in _masks(a.size))


@given(small_graphs)
@settings(max_examples=40, deadline=None)
def test_three_tutte_algorithms_agree(g):
    m = matroids.graphic_matroid(g)
    t = matroids.tutte_subset_expansion(m)
    assert t == matroids.tutte_deletion_contraction(m)
    assert t == matroids.tutte_graphic(g)
    assert t == matroids.tutte_deletion_contraction(matroids.incidence_matroid(g))


@given(small_rows)
@settings(max_examples=40, deadline=None)
def test_binary_tutte_and_specialisations(rows):
    m = matroids.vector_matroid_f2(rows)
    t = matroids.tutte_subset_expansion(m)
    assert t == matroids.tutte_deletion_contraction(m)
    assert t.evaluate([1, 1]) == matroids.count_bases(m)
    assert t.evaluate([2, 2]) == 2 ** m.size
    assert t.evaluate([2, 1]) == sum(1 for s in _masks(m.size) if m.rank(s) == bin(s).count("1"))


def _nx_tutte(g: Multigraph) -> Poly:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    x, y = sympy.symbols("x y")
    expr = sympy.Poly(sympy.expand(nx.tutte_polynomial(h)), x, y)
    return Poly({k: int(v) for k, v in expr.as_dict().items()}, 2)


@pytest.mark.parametrize("g", [
    complete_graph(4), cycle_graph(5), path_graph(3),
    Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 2))),
    Multigraph(4, ((0, 1), (2, 3))),
])
def test_tutte_against_networkx(g):
    assert matroids.tutte_graphic(g) == _nx_tutte(g)


def test_known_polynomials():
    assert matroids.tutte_subset_expansion(matroids.graphic_matroid(complete_graph(3))) == \
        bivariate({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    digon = Multigraph(2, ((0, 1), (0, 1)))
    assert matroids.tutte_graphic(digon) == bivariate({(1, 0): 1, (0, 1): 1})
    assert matroids.tutte_graphic(Multigraph(1, ((0, 0),))) == bivariate({(0, 1): 1})
    assert matroids.tutte_graphic(Multigraph(0, ())) == bivariate({(0, 0): 1})
    # K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    assert matroids.tutte_graphic(complete_graph(4)) == bivariate(
        {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1})


def test_spanning_tree_count_of_k6():
    assert matroids.tutte_graphic(complete_graph(6)).evaluate([1, 1]) == 6 ** 4


def test_minors():
    m = matroids.vector_matroid_f2([[1, 0, 1, 0], [0, 1, 1, 0]])
    assert m.is_loop(3) and not m.is_coloop(0)
    assert m.delete(3).size == 3
    c = m.contract(0)
    assert c.full_rank() == 1
    assert c.rank(0b11) == 1  # columns 1 and 2 become parallel
    g = matroids.graphic_matroid(path_graph(2))
    assert g.is_coloop(0)


def test_caps():
    with pytest.raises(CapExceeded):
        matroids.rank_profile(matroids.graphic_matroid(complete_graph(8)), cap=20)
    with pytest.raises(CapExceeded):
        matroids.graphic_rank_profile(Multigraph(14, ()), cap=13)


def test_profile_and_graphic_profile_agree_on_denser_graphs():
    g = complete_graph(6).add_edges([(0, 1), (2, 2)])
    assert matroids.graphic_rank_profile(g) == matroids.rank_profile(matroids.graphic_matroid(g))
