"""Undirected multigraphs, the constructions used to build test families,
and backtracking isomorphism / automorphism counting for small graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceeded

__all__ = [
    "Multigraph",
    "path_graph",
    "complete_graph",
    "star_graph",
    "cycle_graph",
    "empty_graph",
    "join",
    "disjoint_union",
    "subdivide_edge",
    "is_isomorphic",
    "isomorphisms",
    "automorphism_count",
    "DEFAULT_ISO_CAP",
]

DEFAULT_ISO_CAP = 10


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..n_vertices-1`` and a sorted tuple of edges ``(u, v)``
    with ``u <= v``.  Repeated pairs are parallel edges, ``u == v`` a loop."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        edges = tuple(sorted(_norm(int(u), int(v)) for u, v in self.edges))
        for u, v in edges:
            if u < 0 or v >= self.n_vertices:
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n_vertices} vertices")
        object.__setattr__(self, "edges", edges)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def loops(self) -> list[int]:
        cnt = [0] * self.n_vertices
        for u, v in self.edges:
            if u == v:
                cnt[u] += 1
        return cnt

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def neighbors(self) -> list[set]:
        nb = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def isolated_vertices(self) -> list[int]:
        touched = {w for e in self.edges for w in e}
        return [v for v in range(self.n_vertices) if v not in touched]

    def without_isolated(self) -> "Multigraph":
        """Drop isolated vertices, relabelling the rest in order."""
        keep = sorted({w for e in self.edges for w in e})
        idx = {v: i for i, v in enumerate(keep)}
        return Multigraph(len(keep), tuple((idx[u], idx[v]) for u, v in self.edges))

    def relabel(self, perm: list[int]) -> "Multigraph":
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n_vertices)):
            raise ValueError("perm must be a permutation of the vertices")
        return Multigraph(self.n_vertices, tuple((perm[u], perm[v]) for u, v in self.edges))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        return Multigraph(self.n_vertices, self.edges + tuple(edges))

    def add_vertices(self, k: int) -> "Multigraph":
        return Multigraph(self.n_vertices + k, self.edges)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return self.n_vertices <= 1 or len(self.components()) == 1

    def is_simple(self) -> bool:
        return not self.has_loops() and len(set(self.edges)) == len(self.edges)

    def is_biconnected(self) -> bool:
        """2-connected: connected, at least 3 vertices, no cut vertex."""
        if self.n_vertices < 3 or not self.is_connected():
            return False
        for cut in range(self.n_vertices):
            rest = [v for v in range(self.n_vertices) if v != cut]
            idx = {v: i for i, v in enumerate(rest)}
            sub = Multigraph(len(rest), tuple((idx[u], idx[v]) for u, v in self.edges
                                              if cut not in (u, v)))
            if not sub.is_connected():
                return False
        return True

    def __str__(self):
        return f"Multigraph(V={self.n_vertices}, E={list(self.edges)})"


def empty_graph(n: int) -> Multigraph:
    return Multigraph(n, ())


def path_graph(n: int) -> Multigraph:
    """Path with ``n`` edges on ``n + 1`` vertices."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    return Multigraph(n + 1, tuple((i, i + 1) for i in range(n)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(k: int) -> Multigraph:
    """``K_{1,k}`` with centre 0."""
    return Multigraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def cycle_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def disjoint_union(g1: Multigraph, g2: Multigraph) -> Multigraph:
    off = g1.n_vertices
    return Multigraph(off + g2.n_vertices,
                      g1.edges + tuple((u + off, v + off) for u, v in g2.edges))


def join(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Disjoint union plus one edge between every vertex of ``g1`` and every
    vertex of ``g2``; vertices of ``g2`` are shifted by ``g1.n_vertices``."""
    off = g1.n_vertices
    cross = tuple((a, off + b) for a in range(g1.n_vertices) for b in range(g2.n_vertices))
    return disjoint_union(g1, g2).add_edges(cross)


def subdivide_edge(g: Multigraph, e: tuple[int, int], times: int) -> Multigraph:
    """Replace one copy of ``e`` by a path through ``times`` new vertices."""
    if times < 0:
        raise ValueError("times must be nonnegative")
    e = _norm(*e)
    edges = list(g.edges)
    try:
        edges.remove(e)
    except ValueError:
        raise ValueError(f"edge {e} not present") from None
    if times == 0:
        return g
    u, v = e
    chain = [u] + list(range(g.n_vertices, g.n_vertices + times)) + [v]
    edges.extend(zip(chain, chain[1:]))
    return Multigraph(g.n_vertices + times, tuple(edges))


def _search_order(g: Multigraph) -> list[int]:
    # Visit vertices so that each new one is adjacent to earlier ones where possible;
    # this makes the partial-map check prune early.
    nb = g.neighbors()
    deg = g.degrees()
    order: list[int] = []
    seen: set = set()
    remaining = sorted(range(g.n_vertices), key=lambda v: (-deg[v], v))
    for root in remaining:
        if root in seen:
            continue
        seen.add(root)
        order.append(root)
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in sorted(nb[v], key=lambda w: (-deg[w], w)):
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
                        nxt.append(w)
            frontier = nxt
    return order


def _adjacency(g: Multigraph) -> list[list[int]]:
    a = [[0] * g.n_vertices for _ in range(g.n_vertices)]
    for u, v in g.edges:
        a[u][v] += 1
        if u != v:
            a[v][u] += 1
    return a


def isomorphisms(g1: Multigraph, g2: Multigraph, cap: int | None = DEFAULT_ISO_CAP) -> Iterator[list[int]]:
    """Yield every vertex bijection ``f`` (as a list) mapping the edge
    multiset of ``g1`` onto that of ``g2``."""
    n = g1.n_vertices
    if cap is not None and max(n, g2.n_vertices) > cap:
        raise CapExceeded(f"isomorphism search limited to {cap} vertices")
    if n != g2.n_vertices or g1.n_edges != g2.n_edges:
        return
    d1, d2 = g1.degrees(), g2.degrees()
    l1, l2 = g1.loops(), g2.loops()
    if sorted(zip(d1, l1)) != sorted(zip(d2, l2)):
        return
    if g1.multiplicity().most_common(1) and \
            sorted(g1.multiplicity().values()) != sorted(g2.multiplicity().values()):
        return
    a1, a2 = _adjacency(g1), _adjacency(g2)
    order = _search_order(g1)
    f = [-1] * n
    used = [False] * n

    def extend(pos):
        if pos == n:
            yield list(f)
            return
        v = order[pos]
        for w in range(n):
            if used[w] or d1[v] != d2[w] or l1[v] != l2[w]:
                continue
            ok = True
            for u in order[:pos]:
                if a1[v][u] != a2[w][f[u]]:
                    ok = False
                    break
            if not ok:
                continue
            f[v] = w
            used[w] = True
            yield from extend(pos + 1)
            used[w] = False
            f[v] = -1

    yield from extend(0)


def is_isomorphic(g1: Multigraph, g2: Multigraph, cap: int | None = DEFAULT_ISO_CAP) -> bool:
    for _ in isomorphisms(g1, g2, cap):
        return True
    return False


def automorphism_count(g: Multigraph, cap: int | None = DEFAULT_ISO_CAP) -> int:
    """Number of vertex permutations preserving the edge multiset.

    Parallel edges are not permuted among themselves: a digon has 2
    automorphisms, not 4.
    """
    return sum(1 for _ in isomorphisms(g, g, cap))
