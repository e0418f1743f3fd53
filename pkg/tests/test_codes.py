import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, random_rows
from tuttetheta import codes, matroids
from tuttetheta.codes import BinaryCode
from tuttetheta.graphs import complete_graph
from tuttetheta.io import fixture_code
from tuttetheta.poly import Poly, bivariate

code_rows = st.builds(lambda seed: random_rows(random.Random(seed), 10, 6),
                      st.integers(0, 10 ** 6))


def brute_span(rows):
    n = len(rows[0])
    vecs = {0}
    for r in rows:
        v = sum(b << i for i, b in enumerate(r))
        vecs |= {w ^ v for w in vecs}
    return n, vecs


@given(code_rows)
@settings(max_examples=60, deadline=None)
def test_codewords_are_the_span(rows):
    n, span = brute_span(rows)
    c = BinaryCode.from_matrix(rows)
    words = list(c.codewords())
    assert len(words) == len(set(words)) == len(span)
    assert set(words) == span
    assert words[0] == 0
    assert all(c.contains(w) for w in span)
    dist = [0] * (n + 1)
    for w in span:
        dist[bin(w).count("1")] += 1
    assert c.weight_distribution() == dist


@given(code_rows)
@settings(max_examples=60, deadline=None)
def test_greene_forms_match_enumeration(rows):
    m = matroids.vector_matroid_f2(rows)
    w = codes.weight_enumerator_enum(codes.code_from_matroid(m))
    assert codes.weight_enumerator_greene(m) == w
    assert codes.weight_enumerator_subset_form(m) == w


@given(code_rows)
@settings(max_examples=60, deadline=None)
def test_dual_properties(rows):
    c = BinaryCode.from_matrix(rows)
    d = codes.dual(c)
    assert c.dimension + d.dimension == c.length
    assert codes.dual(d) == c
    assert all(bin(a & b).count("1") % 2 == 0 for a in c.generators for b in d.generators)
    w = codes.weight_enumerator_enum(c)
    assert codes.macwilliams_transform(w, 2 ** c.dimension) == codes.weight_enumerator_enum(d)


@given(code_rows)
@settings(max_examples=60, deadline=None)
def test_replication(rows):
    c = BinaryCode.from_matrix(rows)
    r = codes.replicate4(c)
    assert r.length == 4 * c.length and r.dimension == c.dimension
    assert codes.is_doubly_even(r)
    w = codes.weight_enumerator_enum(c)
    x4 = bivariate({(4, 0): 1})
    y4 = bivariate({(0, 4): 1})
    assert codes.weight_enumerator_enum(r) == w.substitute([x4, y4])
    assert codes.is_doubly_even(c) == all(
        bin(v).count("1") % 4 == 0 for v in c.codewords())


def test_e8_and_d16():
    e8 = fixture_code("e8")
    assert e8.length == 8 and e8.dimension == 4
    assert codes.is_self_dual(e8) and codes.is_doubly_even(e8)
    assert codes.weight_enumerator_enum(e8) == bivariate({(8, 0): 1, (4, 4): 14, (0, 8): 1})
    d16 = fixture_code("d16plus")
    assert codes.is_self_dual(d16) and codes.is_doubly_even(d16)
    ee = codes.direct_sum(e8, e8)
    assert codes.weight_enumerator_enum(ee) == codes.weight_enumerator_enum(d16)
    # the weight-4 words of d16+ are not split across two blocks of 8 as in e8 + e8
    w4 = [v for v in d16.codewords() if bin(v).count("1") == 4]
    assert any(v & 0xFF and v >> 8 for v in w4)


def test_rref_and_format():
    c = BinaryCode.from_matrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert c.dimension == 2
    assert c.pivots() == [0, 1]
    assert c.format() == "101\n011"
    assert c == BinaryCode.from_matrix([[0, 1, 1], [1, 1, 0]])
    with pytest.raises(ValueError):
        BinaryCode.from_matrix([[1, 0], [1]])
    with pytest.raises(ValueError):
        BinaryCode(2, [0b100])


def test_code_from_graphic_matroid_rejected():
    with pytest.raises(TypeError):
        codes.code_from_matroid(matroids.graphic_matroid(complete_graph(3)))


def test_incidence_code_of_triangle():
    m = matroids.incidence_matroid(complete_graph(3))
    c = codes.code_from_matroid(m)
    # cut space of K3: 0, and three cuts of size 2
    assert codes.weight_enumerator_enum(c) == bivariate({(3, 0): 1, (1, 2): 3})


def test_greene_on_graphs_with_loops():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, 5, 7, loops=True)
        m = matroids.incidence_matroid(g)
        assert codes.weight_enumerator_greene(m) == codes.weight_enumerator_enum(codes.code_from_matroid(m))


def test_macwilliams_requires_integrality():
    with pytest.raises(ArithmeticError):
        codes.macwilliams_transform(bivariate({(2, 0): 1, (0, 2): 1}), 3)
    assert isinstance(codes.macwilliams_transform(bivariate({(1, 0): 1, (0, 1): 1}), 2), Poly)
