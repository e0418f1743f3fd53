"""n-state polynomials of graphs and the two decoding procedures.

``z_state_symbolic`` sums, over all maps from vertices to ``{1..n}``, the
monomial ``prod x_{s(u)s(v)}`` over edges.  ``z_state_weighted`` does the
same with a prime-weighted matrix, where the entry for the pair ``{i, j}``
is ``p x^p``: every term of the result can then be factored back into the
edge-label multiset that produced it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import CapExceeded, DecodeError
from .graphs import Multigraph, automorphism_count
from .poly import Poly
from .primes import WeightMatrix, verify_admissible

__all__ = [
    "DEFAULT_STATE_CAP",
    "SymbolicStatePoly",
    "PseudoStatePoly",
    "DecodedTerm",
    "state_variables",
    "z_state_symbolic",
    "z_state_weighted",
    "vertex_count",
    "edge_count",
    "decode_term",
    "reconstruct_pseudo",
    "reconstruct_symbolic",
    "negami",
    "extended_negami",
]

DEFAULT_STATE_CAP = 10 ** 8


def state_variables(n: int) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``1 <= i <= j <= n``, in variable order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def _variable_names(n: int) -> list[str]:
    return [f"x{i}_{j}" for i, j in state_variables(n)]


@dataclass(frozen=True)
class SymbolicStatePoly:
    n: int
    poly: Poly

    def variable_pairs(self):
        return state_variables(self.n)

    def all_ones(self) -> int:
        return self.poly.evaluate([1] * self.poly.nvars)


@dataclass(frozen=True)
class PseudoStatePoly:
    matrix: WeightMatrix
    poly: Poly

    @property
    def term_count(self) -> int:
        return len(self.poly)


@dataclass(frozen=True)
class DecodedTerm:
    coefficient: int
    exponent: int
    pairs: Counter = field(hash=False)
    cofactor: int

    @property
    def support(self) -> frozenset:
        """Indices occurring in off-diagonal pairs."""
        return frozenset(k for (i, j) in self.pairs if i != j for k in (i, j))

    @property
    def edge_total(self) -> int:
        return sum(self.pairs.values())

    def has_diagonal(self) -> bool:
        return any(i == j for (i, j) in self.pairs)


def _vertex_plan(g: Multigraph):
    """Order the non-isolated vertices and, for each, list the earlier
    (or same) positions it is joined to, one entry per edge."""
    deg = g.degrees()
    order = []
    seen = set()
    nb = g.neighbors()
    for root in range(g.n_vertices):
        if root in seen or deg[root] == 0:
            continue
        seen.add(root)
        stack = [root]
        while stack:
            v = stack.pop(0)
            order.append(v)
            for w in sorted(nb[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    pos = {v: i for i, v in enumerate(order)}
    back = [[] for _ in order]
    for u, v in g.edges:
        pu, pv = pos[u], pos[v]
        if pu < pv:
            back[pv].append(pu)
        else:
            back[pu].append(pv)
    return order, back


def _check_cap(g: Multigraph, n: int, cap: int | None):
    if cap is not None and n ** g.n_vertices > cap:
        raise CapExceeded(f"{n}^{g.n_vertices} states exceeds the enumeration cap {cap}")


def z_state_symbolic(g: Multigraph, n: int, cap: int | None = DEFAULT_STATE_CAP) -> SymbolicStatePoly:
    """Symbolic n-state polynomial in the variables ``x_{ij}``, ``i <= j``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(g, n, cap)
    pairs = state_variables(n)
    var = {}
    for idx, (i, j) in enumerate(pairs):
        var[(i, j)] = var[(j, i)] = idx
    nv = len(pairs)
    order, back = _vertex_plan(g)
    k = len(order)
    state = [0] * k
    counts = [0] * nv
    acc: Counter = Counter()

    def rec(i):
        if i == k:
            acc[tuple(counts)] += 1
            return
        for s in range(1, n + 1):
            state[i] = s
            touched = [var[(s, state[j] if j != i else s)] for j in back[i]]
            for t in touched:
                counts[t] += 1
            rec(i + 1)
            for t in touched:
                counts[t] -= 1

    rec(0)
    iso = n ** (g.n_vertices - k)
    poly = Poly({e: c * iso for e, c in acc.items()}, nv, _variable_names(n))
    return SymbolicStatePoly(n, poly)


def z_state_weighted(g: Multigraph, w: WeightMatrix, cap: int | None = DEFAULT_STATE_CAP) -> PseudoStatePoly:
    """Pseudo n-state polynomial: each state contributes ``prod p * x^(sum p)``."""
    n = w.n
    _check_cap(g, n, cap)
    table = [[0] * (n + 1)] + [[0] + [w.prime(i, j) for j in range(1, n + 1)]
                               for i in range(1, n + 1)]
    order, back = _vertex_plan(g)
    k = len(order)
    state = [0] * k
    acc: Counter = Counter()

    def rec(i, coeff, exp):
        if i == k:
            acc[exp] += coeff
            return
        for s in range(1, n + 1):
            state[i] = s
            row = table[s]
            c, e = coeff, exp
            for j in back[i]:
                p = row[state[j]] if j != i else row[s]
                c *= p
                e += p
            rec(i + 1, c, e)

    rec(0, 1, 0)
    iso = n ** (g.n_vertices - k)
    poly = Poly({(e,): c * iso for e, c in acc.items()}, 1)
    return PseudoStatePoly(w, poly)


def vertex_count(z: SymbolicStatePoly) -> int:
    """``log_n`` of the all-ones evaluation, which is ``n^|V|``."""
    if z.n < 2:
        raise ValueError("vertex count needs at least 2 states")
    total = z.all_ones()
    k = _exact_log(total, z.n)
    if k is None:
        raise DecodeError(f"all-ones value {total} is not a power of {z.n}")
    return k


def _exact_log(value: int, base: int):
    if value < 1:
        return None
    k = 0
    while value % base == 0 and value > 1:
        value //= base
        k += 1
    return k if value == 1 else None


def edge_count(z) -> int:
    """``log_2`` of the coefficient sum of the pseudo 1-state polynomial."""
    if isinstance(z, PseudoStatePoly):
        if z.matrix.n != 1 or z.matrix.prime(1, 1) != 2:
            raise ValueError("edge count needs the 1-state matrix [2x^2]")
        z = z.poly
    total = z.coefficient_sum()
    k = _exact_log(total, 2)
    if k is None:
        raise DecodeError(f"coefficient sum {total} is not a power of two")
    return k


def decode_term(c: int, s: int, w: WeightMatrix) -> DecodedTerm:
    """Factor the coefficient ``c`` over the table primes of ``w`` and check
    that the recovered multiset reproduces the exponent ``s``."""
    if c <= 0:
        raise DecodeError("coefficients of a pseudo state polynomial are positive")
    rev = w.reverse_index
    pairs: Counter = Counter()
    rest = c
    for p in sorted(rev, reverse=True):
        while rest % p == 0:
            rest //= p
            pairs[rev[p]] += 1
    total = sum(w.prime(*ij) * k for ij, k in pairs.items())
    if total != s:
        raise DecodeError(f"term {c}x^{s}: factored primes sum to {total}, not {s}")
    return DecodedTerm(c, s, pairs, rest)


def reconstruct_pseudo(z, w: WeightMatrix | None = None, check: bool = True,
                       aut_cap: int | None = None) -> Multigraph:
    """Recover a graph, up to isomorphism, from its pseudo state polynomial.

    The term with the largest off-diagonal index support comes from states
    that are injective on the non-isolated part ``G'``; its prime factors
    give the edges of ``G'`` and its cofactor equals
    ``n^(isolated vertices) * |Aut(G')|``.

    With ``check`` the matrix must satisfy the separation inequalities for
    the decoded edge count.
    """
    if isinstance(z, PseudoStatePoly):
        w = w or z.matrix
        z = z.poly
    if w is None:
        raise ValueError("a weight matrix is required")
    n = w.n
    if n < 2:
        raise ValueError("reconstruction needs at least 2 states")
    if z.is_zero():
        raise DecodeError("zero polynomial")
    decoded = [decode_term(c, e[0], w) for e, c in z.items()]
    totals = {d.edge_total for d in decoded}
    if len(totals) != 1:
        raise DecodeError(f"terms disagree on the edge count: {sorted(totals)}")
    m = totals.pop()
    if check and not verify_admissible(w.chain(), m, n):
        raise ValueError(f"weight matrix is not admissible for {m} edges")
    best = min(decoded, key=lambda d: (-len(d.support), d.exponent))
    if best.has_diagonal():
        raise DecodeError("the support-maximal term uses a diagonal entry: "
                          "graphs with loops cannot be reconstructed")
    support = sorted(best.support)
    if len(support) > n:  # pragma: no cover - impossible for valid input
        raise DecodeError("support larger than the state count")
    idx = {s: i for i, s in enumerate(support)}
    edges = []
    for (i, j), k in best.pairs.items():
        edges.extend([(idx[i], idx[j])] * k)
    core = Multigraph(len(support), tuple(edges))
    aut = automorphism_count(core, cap=aut_cap)
    if best.cofactor % aut:
        raise DecodeError(f"cofactor {best.cofactor} is not divisible by |Aut(G')| = {aut}")
    iso = _exact_log(best.cofactor // aut, n)
    if iso is None:
        raise DecodeError(f"cofactor {best.cofactor} is not {n}^k * {aut}")
    return core.add_vertices(iso)


def reconstruct_symbolic(z: SymbolicStatePoly) -> Multigraph:
    """Recover a graph from its symbolic n-state polynomial.

    Any term whose variables mention the most distinct state indices comes
    from a state that is injective on the non-isolated vertices; exponents
    give edge multiplicities.  Requires ``n`` at least the number of
    non-isolated vertices.
    """
    total_vertices = vertex_count(z)
    pairs = state_variables(z.n)
    best = None
    best_key = None
    for exps, _ in z.poly.items():
        support = {k for (i, j), e in zip(pairs, exps) if e for k in (i, j)}
        key = (-len(support), exps)
        if best_key is None or key < best_key:
            best, best_key = (exps, support), key
    exps, support = best
    idx = {s: i for i, s in enumerate(sorted(support))}
    edges = []
    for (i, j), e in zip(pairs, exps):
        if e:
            edges.extend([(idx[i], idx[j])] * e)
    if len(support) > total_vertices:
        raise DecodeError("support exceeds the vertex count")
    return Multigraph(total_vertices, tuple(edges))


def negami(z: SymbolicStatePoly) -> Poly:
    """Specialise ``x_ii -> x + y`` and ``x_ij -> y`` (variables ``x, y``)."""
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    subs = [x + y if i == j else y for i, j in state_variables(z.n)]
    return z.poly.substitute(subs)


def extended_negami(z: SymbolicStatePoly) -> Poly:
    """Specialise ``x_ii -> x_i + y``, ``x_ij -> y``; variables
    ``x_1..x_n, y`` in that order."""
    n = z.n
    names = [f"x{i}" for i in range(1, n + 1)] + ["y"]
    xs = [Poly.variable(i, n + 1, names) for i in range(n)]
    y = Poly.variable(n, n + 1, names)
    subs = [xs[i - 1] + y if i == j else y for i, j in state_variables(n)]
    return z.poly.substitute(subs)
