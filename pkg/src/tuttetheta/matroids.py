"""Graphic and binary matroids as rank oracles, and their Tutte polynomials.

Subsets of the ground set ``{0, ..., size-1}`` are integer bitmasks.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb

from .errors import CapExceeded
from .graphs import Multigraph
from .poly import Poly

__all__ = [
    "Matroid",
    "GraphicMatroid",
    "BinaryMatroid",
    "graphic_matroid",
    "vector_matroid_f2",
    "incidence_matroid",
    "rank_profile",
    "tutte_from_profile",
    "tutte_subset_expansion",
    "tutte_deletion_contraction",
    "graphic_rank_profile",
    "tutte_graphic",
    "count_bases",
    "DEFAULT_SUBSET_CAP",
    "DEFAULT_VERTEX_CAP",
]

DEFAULT_SUBSET_CAP = 24
DEFAULT_VERTEX_CAP = 13

X = Poly.variable(0, 2)
Y = Poly.variable(1, 2)
ONE = Poly.constant(1, 2)


class Matroid:
    """Base class.  Subclasses supply ``size``, ``rank`` and minors, plus an
    incremental state used to sweep all subsets cheaply."""

    size: int

    def rank(self, mask: int) -> int:
        raise NotImplementedError

    def full_rank(self) -> int:
        return self.rank((1 << self.size) - 1)

    def delete(self, e: int) -> "Matroid":
        raise NotImplementedError

    def contract(self, e: int) -> "Matroid":
        raise NotImplementedError

    def is_loop(self, e: int) -> bool:
        return self.rank(1 << e) == 0

    def is_coloop(self, e: int) -> bool:
        full = (1 << self.size) - 1
        return self.rank(full & ~(1 << e)) < self.rank(full)

    # incremental sweep: state -> (state', grew)
    def _empty(self):
        raise NotImplementedError

    def _add(self, state, e):
        raise NotImplementedError

    def permute(self, perm: list[int]) -> "Matroid":
        """Matroid on the relabelled ground set: new element ``perm[e]`` is old ``e``."""
        raise NotImplementedError

    def rank_oracle_table(self) -> list[int]:
        return [self.rank(mask) for mask in range(1 << self.size)]


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element ``e`` is ``graph.edges[e]``."""

    def __init__(self, graph: Multigraph, edges=None):
        self.graph = graph
        # keep the caller's edge order; Multigraph sorts its own copy
        self.edges = tuple(edges) if edges is not None else graph.edges
        self.size = len(self.edges)

    def rank(self, mask: int) -> int:
        parent = list(range(self.graph.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        e = 0
        while mask:
            if mask & 1:
                u, v = self.edges[e]
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    r += 1
            mask >>= 1
            e += 1
        return r

    def _empty(self):
        return tuple(range(self.graph.n_vertices))

    def _add(self, comp, e):
        u, v = self.edges[e]
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return comp, False
        return tuple(cu if c == cv else c for c in comp), True

    def delete(self, e):
        edges = self.edges[:e] + self.edges[e + 1:]
        return GraphicMatroid(Multigraph(self.graph.n_vertices, edges), edges)

    def contract(self, e):
        u, v = self.edges[e]
        if u == v:
            return self.delete(e)
        # merge v into u, then close the gap left by v
        def f(w):
            w = u if w == v else w
            return w - 1 if w > v else w
        edges = tuple((f(a), f(b)) for i, (a, b) in enumerate(self.edges) if i != e)
        return GraphicMatroid(Multigraph(self.graph.n_vertices - 1, edges), edges)

    def permute(self, perm):
        edges = [None] * self.size
        for old, new in enumerate(perm):
            edges[new] = self.edges[old]
        return GraphicMatroid(self.graph, edges)

    def __repr__(self):
        return f"GraphicMatroid({self.graph.n_vertices} vertices, edges={list(self.edges)})"


class BinaryMatroid(Matroid):
    """Column matroid of a 0/1 matrix over the two-element field.

    ``columns[e]`` is an int whose bit ``r`` is the entry in row ``r``.
    """

    def __init__(self, columns, nrows: int):
        self.columns = tuple(int(c) for c in columns)
        self.nrows = nrows
        self.size = len(self.columns)
        for c in self.columns:
            if c >> nrows:
                raise ValueError("column has bits beyond the row count")

    @classmethod
    def from_rows(cls, rows) -> "BinaryMatroid":
        rows = [list(r) for r in rows]
        if not rows:
            return cls((), 0)
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        cols = []
        for c in range(ncols):
            v = 0
            for r, row in enumerate(rows):
                if row[c] & 1:
                    v |= 1 << r
            cols.append(v)
        return cls(cols, len(rows))

    def matrix(self) -> list[list[int]]:
        return [[(c >> r) & 1 for c in self.columns] for r in range(self.nrows)]

    def rank(self, mask: int) -> int:
        basis: dict = {}
        e = 0
        r = 0
        while mask:
            if mask & 1:
                _, grew = self._reduce(basis, self.columns[e])
                r += grew
            mask >>= 1
            e += 1
        return r

    @staticmethod
    def _reduce(basis, v):
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                return basis, True
            v ^= b
        return basis, False

    def _empty(self):
        return ()

    def _add(self, basis, e):
        v = self.columns[e]
        for b in basis:
            if v ^ b < v:
                v ^= b
        if not v:
            return basis, False
        # keep basis sorted by leading bit, descending, so one pass reduces
        return tuple(sorted(basis + (v,), reverse=True)), True

    def delete(self, e):
        return BinaryMatroid(self.columns[:e] + self.columns[e + 1:], self.nrows)

    def contract(self, e):
        col = self.columns[e]
        if not col:
            return self.delete(e)
        r = col.bit_length() - 1
        out = []
        for i, c in enumerate(self.columns):
            if i == e:
                continue
            if (c >> r) & 1:
                c ^= col
            low = c & ((1 << r) - 1)
            out.append(low | ((c >> (r + 1)) << r))
        return BinaryMatroid(out, self.nrows - 1)

    def permute(self, perm):
        cols = [0] * self.size
        for old, new in enumerate(perm):
            cols[new] = self.columns[old]
        return BinaryMatroid(cols, self.nrows)

    def __repr__(self):
        return f"BinaryMatroid({self.matrix()})"


def graphic_matroid(g: Multigraph) -> GraphicMatroid:
    return GraphicMatroid(g)


def vector_matroid_f2(rows) -> BinaryMatroid:
    """Matroid of the columns of a 0/1 matrix given as a list of rows."""
    return BinaryMatroid.from_rows(rows)


def incidence_matroid(g: Multigraph) -> BinaryMatroid:
    """Vector matroid of the vertex-edge incidence matrix; loops give zero columns."""
    cols = []
    for u, v in g.edges:
        cols.append(0 if u == v else (1 << u) | (1 << v))
    return BinaryMatroid(cols, g.n_vertices)


def rank_profile(m: Matroid, cap: int | None = DEFAULT_SUBSET_CAP) -> Counter:
    """Counter of ``(rank(A), |A|)`` over all subsets ``A`` of the ground set."""
    if cap is not None and m.size > cap:
        raise CapExceeded(f"subset sweep limited to {cap} elements, matroid has {m.size}")
    prof: Counter = Counter()
    size = m.size

    def rec(e, state, r, k):
        if e == size:
            prof[(r, k)] += 1
            return
        rec(e + 1, state, r, k)
        s2, grew = m._add(state, e)
        rec(e + 1, s2, r + grew, k + 1)

    rec(0, m._empty(), 0, 0)
    return prof


def tutte_from_profile(prof: Counter, full_rank: int) -> Poly:
    """Expand ``sum (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`` from subset counts."""
    # (x-1)^a (y-1)^b expanded with binomials
    terms: Counter = Counter()
    for (r, k), cnt in prof.items():
        a, b = full_rank - r, k - r
        for i in range(a + 1):
            ca = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                terms[(i, j)] += cnt * ca * comb(b, j) * (-1) ** (b - j)
    return Poly(terms, 2)


def tutte_subset_expansion(m: Matroid, cap: int | None = DEFAULT_SUBSET_CAP) -> Poly:
    """Tutte polynomial from the corank-nullity sum over all subsets."""
    return tutte_from_profile(rank_profile(m, cap), m.full_rank())


def tutte_deletion_contraction(m: Matroid) -> Poly:
    """Tutte polynomial by ``T(M) = T(M\\e) + T(M/e)``.

    Loops and coloops are peeled first (factors ``y`` and ``x``); the
    remaining element of lowest index is then split.
    """
    if m.size == 0:
        return ONE
    factor = ONE
    while m.size:
        for e in range(m.size):
            if m.is_loop(e):
                factor = factor * Y
                m = m.delete(e)
                break
            if m.is_coloop(e):
                factor = factor * X
                m = m.contract(e)
                break
        else:
            break
    if m.size == 0:
        return factor
    return factor * (tutte_deletion_contraction(m.delete(0)) +
                     tutte_deletion_contraction(m.contract(0)))


def _conv(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def graphic_rank_profile(g: Multigraph, cap: int | None = DEFAULT_VERTEX_CAP) -> Counter:
    """Same counts as ``rank_profile(graphic_matroid(g))``, by a dynamic
    program over vertex subsets instead of edge subsets.

    For a vertex set ``S`` let ``conn(S)`` count, by size, the edge sets of
    the induced subgraph that connect ``S``.  All edge sets of ``G[S]``
    split by the component containing the lowest vertex, so
    ``all(S) = sum over T of conn(T) * all(S - T)``, ``T`` ranging over
    subsets of ``S`` holding its lowest vertex.  Running the same split
    while counting components gives counts by (components, size), and
    rank is ``|V| - components``.  Cost is about ``3^|V|`` polynomial
    products, independent of the number of edges.
    """
    nv = g.n_vertices
    if cap is not None and nv > cap:
        raise CapExceeded(f"vertex-subset sweep limited to {cap} vertices, graph has {nv}")
    full = (1 << nv) - 1
    inside = [0] * (full + 1)  # edges with both ends in S
    for u, v in g.edges:
        both = (1 << u) | (1 << v)
        for s in range(full + 1):
            if s & both == both:
                inside[s] += 1
    conn = [None] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        c = [comb(inside[s], a) for a in range(inside[s] + 1)]
        t = rest
        while t:  # proper subsets T = low | t' with t' a nonempty-complement subset of rest
            t = (t - 1) & rest
            tt = low | t
            other = s ^ tt
            sub = _conv(conn[tt], [comb(inside[other], a) for a in range(inside[other] + 1)])
            for a, x in enumerate(sub):
                c[a] -= x
        conn[s] = c
    # by_comp[s][k] is a size-indexed count list for edge sets with k components
    by_comp: list = [None] * (full + 1)
    by_comp[0] = {0: [1]}
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        acc: dict = {}
        t = rest
        while True:
            tt = low | t
            for k, lst in by_comp[s ^ tt].items():
                prod = _conv(conn[tt], lst)
                cur = acc.setdefault(k + 1, [0] * len(prod))
                if len(cur) < len(prod):
                    cur.extend([0] * (len(prod) - len(cur)))
                for a, x in enumerate(prod):
                    cur[a] += x
            if t == 0:
                break
            t = (t - 1) & rest
        by_comp[s] = acc
    prof: Counter = Counter()
    for k, lst in by_comp[full].items():
        for a, cnt in enumerate(lst):
            if cnt:
                prof[(nv - k, a)] += cnt
    return prof


def tutte_graphic(g: Multigraph, cap: int | None = DEFAULT_VERTEX_CAP) -> Poly:
    """Tutte polynomial of a graph through ``graphic_rank_profile``."""
    return tutte_from_profile(graphic_rank_profile(g, cap), g.n_vertices - len(g.components()))


def count_bases(m: Matroid) -> int:
    """Number of ``r(E)``-subsets of full rank, by direct enumeration."""
    r = m.full_rank()
    total = 0
    for combo in combinations(range(m.size), r):
        mask = 0
        for e in combo:
            mask |= 1 << e
        if m.rank(mask) == r:
            total += 1
    return total
