import random
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from tuttetheta import statepoly
from tuttetheta.errors import CapExceeded, DecodeError
from tuttetheta.graphs import Multigraph, complete_graph, disjoint_union, empty_graph, is_isomorphic, path_graph
from tuttetheta.matroids import graphic_matroid, rank_profile
from tuttetheta.poly import Poly, univariate
from tuttetheta.primes import WeightMatrix, admissible_matrix, paper_weight_matrix

small_graphs = st.builds(lambda seed: random_graph(random.Random(seed), 5, 6, loops=True),
                         st.integers(0, 10 ** 6))


def brute_symbolic(g: Multigraph, n: int) -> Poly:
    pairs = statepoly.state_variables(n)
    index = {p: k for k, p in enumerate(pairs)}
    acc: Counter = Counter()
    for sigma in product(range(1, n + 1), repeat=g.n_vertices):
        exps = [0] * len(pairs)
        for u, v in g.edges:
            a, b = sorted((sigma[u], sigma[v]))
            exps[index[(a, b)]] += 1
        acc[tuple(exps)] += 1
    return Poly(acc, len(pairs))


def brute_weighted(g: Multigraph, w: WeightMatrix) -> Poly:
    acc: Counter = Counter()
    for sigma in product(range(1, w.n + 1), repeat=g.n_vertices):
        c, e = 1, 0
        for u, v in g.edges:
            p = w.prime(sigma[u], sigma[v])
            c *= p
            e += p
        acc[(e,)] += c
    return Poly(acc, 1)


@given(small_graphs, st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_symbolic_matches_brute_force(g, n):
    assert statepoly.z_state_symbolic(g, n).poly == brute_symbolic(g, n)


@given(small_graphs, st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_weighted_matches_brute_force(g, n):
    w, _ = admissible_matrix(2, n)
    assert statepoly.z_state_weighted(g, w).poly == brute_weighted(g, w)


@given(small_graphs, small_graphs)
@settings(max_examples=40, deadline=None)
def test_multiplicative_over_disjoint_union(g, h):
    w, _ = admissible_matrix(1, 2)
    zu = statepoly.z_state_weighted(disjoint_union(g, h), w).poly
    assert zu == statepoly.z_state_weighted(g, w).poly * statepoly.z_state_weighted(h, w).poly
    su = statepoly.z_state_symbolic(disjoint_union(g, h), 2).poly
    assert su == statepoly.z_state_symbolic(g, 2).poly * statepoly.z_state_symbolic(h, 2).poly


@given(small_graphs, st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_relabelling_invariance(g, r):
    perm = list(range(g.n_vertices))
    r.shuffle(perm)
    w, _ = admissible_matrix(3, 3)
    assert statepoly.z_state_weighted(g, w).poly == statepoly.z_state_weighted(g.relabel(perm), w).poly
    assert statepoly.z_state_symbolic(g, 3).poly == statepoly.z_state_symbolic(g.relabel(perm), 3).poly


@given(small_graphs, st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_negami_is_a_subset_expansion(g, n):
    # sum over states of prod (y + x[same state]) = sum over A of n^k(A) x^|A| y^(|E|-|A|)
    z = statepoly.z_state_symbolic(g, n)
    expected: Counter = Counter()
    for (r, a), cnt in rank_profile(graphic_matroid(g)).items():
        expected[(a, g.n_edges - a)] += cnt * n ** (g.n_vertices - r)
    assert statepoly.negami(z) == Poly(expected, 2)


def test_extended_negami_collapses_to_negami():
    z = statepoly.z_state_symbolic(complete_graph(3), 3)
    ext = statepoly.extended_negami(z)
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    assert ext.substitute([x, x, x, y]) == statepoly.negami(z)
    assert ext.nvars == 4


def test_counts_from_polynomials():
    g = Multigraph(4, ((0, 1), (0, 1), (2, 2)))
    assert statepoly.vertex_count(statepoly.z_state_symbolic(g, 3)) == 4
    z1 = statepoly.z_state_weighted(g, paper_weight_matrix(1))
    assert z1.poly == univariate({6: 8})
    assert statepoly.edge_count(z1) == 3
    with pytest.raises(ValueError):
        statepoly.edge_count(statepoly.z_state_weighted(g, paper_weight_matrix(2)))
    with pytest.raises(ValueError):
        statepoly.vertex_count(statepoly.z_state_symbolic(g, 1))


def test_isolated_vertices_scale_by_n():
    w, _ = admissible_matrix(1, 3)
    base = statepoly.z_state_weighted(path_graph(1), w).poly
    assert statepoly.z_state_weighted(path_graph(1).add_vertices(2), w).poly == base * 9
    assert statepoly.z_state_weighted(empty_graph(0), w).poly == univariate({0: 1})


def test_state_cap():
    with pytest.raises(CapExceeded):
        statepoly.z_state_symbolic(path_graph(12), 3, cap=1000)
    with pytest.raises(CapExceeded):
        statepoly.z_state_weighted(path_graph(12), paper_weight_matrix(2), cap=1000)


def test_reconstruct_prime_index_examples():
    w3 = paper_weight_matrix(3)
    for g in (complete_graph(2), complete_graph(3), complete_graph(2).add_vertices(1),
              path_graph(2)):
        h = statepoly.reconstruct_pseudo(statepoly.z_state_weighted(g, w3))
        assert is_isomorphic(g, h, cap=None)


def test_reconstruct_multigraphs_with_admissible_matrix():
    g = Multigraph(5, ((0, 1), (0, 1), (1, 2), (3, 4)))
    w, _ = admissible_matrix(4, 5)
    h = statepoly.reconstruct_pseudo(statepoly.z_state_weighted(g, w), w)
    assert is_isomorphic(g, h, cap=None)


def test_decoded_terms_are_consistent():
    w, _ = admissible_matrix(3, 4)
    z = statepoly.z_state_weighted(complete_graph(3), w)
    for (e,), c in z.poly.items():
        d = statepoly.decode_term(c, e, w)
        assert d.edge_total == 3
        assert d.cofactor >= 1


def test_reconstruct_rejections():
    g = Multigraph(2, ((0, 0), (0, 1)))
    w, _ = admissible_matrix(2, 3)
    with pytest.raises(DecodeError):
        statepoly.reconstruct_pseudo(statepoly.z_state_weighted(g, w))
    with pytest.raises(ValueError):
        statepoly.reconstruct_pseudo(statepoly.z_state_weighted(complete_graph(2), paper_weight_matrix(1)))
    # a matrix that is fine for one edge is not admissible for six
    small, _ = admissible_matrix(1, 4)
    with pytest.raises(ValueError):
        statepoly.reconstruct_pseudo(statepoly.z_state_weighted(complete_graph(4), small))
    with pytest.raises(DecodeError):
        statepoly.reconstruct_pseudo(univariate({10: 3}), w)
    with pytest.raises(DecodeError):
        statepoly.reconstruct_pseudo(Poly({}, 1), w)
    with pytest.raises(DecodeError):
        statepoly.decode_term(-5, 5, w)


def test_symbolic_reconstruction_with_loops():
    g = Multigraph(4, ((0, 0), (0, 1), (1, 1), (1, 1)))
    h = statepoly.reconstruct_symbolic(statepoly.z_state_symbolic(g, 4))
    assert is_isomorphic(g, h, cap=None)
