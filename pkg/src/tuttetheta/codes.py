"""Binary linear codes and their weight enumerators.

A codeword of length ``n`` is an int with bit ``i`` holding coordinate
``i``.  Codes keep a generator matrix in reduced row-echelon form (pivot
on the lowest coordinate of each row), so two codes are equal exactly when
their generator tuples are.
"""

from __future__ import annotations

from typing import Iterator

from .errors import CapExceeded
from .matroids import BinaryMatroid, Matroid, rank_profile, tutte_subset_expansion
from .poly import Poly

__all__ = [
    "BinaryCode",
    "code_from_matroid",
    "weight_enumerator_enum",
    "weight_enumerator_greene",
    "weight_enumerator_subset_form",
    "dual",
    "is_self_dual",
    "is_self_orthogonal",
    "is_doubly_even",
    "replicate4",
    "direct_sum",
    "macwilliams_transform",
    "DEFAULT_DIM_CAP",
]

DEFAULT_DIM_CAP = 24


def _rref(rows, length):
    rows = [r for r in rows if r]
    out = []
    for col in range(length):
        bit = 1 << col
        piv = next((i for i, r in enumerate(rows) if r & bit), None)
        if piv is None:
            continue
        p = rows.pop(piv)
        rows = [r ^ p if r & bit else r for r in rows]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        rows = [r for r in rows if r]
    return tuple(out)


def _lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


class BinaryCode:
    """Linear code of length ``length`` spanned by ``rows``."""

    __slots__ = ("length", "generators")

    def __init__(self, length: int, rows=()):
        if length < 0:
            raise ValueError("negative length")
        rows = [int(r) for r in rows]
        for r in rows:
            if r < 0 or r >> length:
                raise ValueError("generator has bits beyond the code length")
        self.length = length
        self.generators = _rref(rows, length)

    @classmethod
    def from_matrix(cls, matrix, length: int | None = None) -> "BinaryCode":
        matrix = [list(r) for r in matrix]
        if length is None:
            length = len(matrix[0]) if matrix else 0
        rows = []
        for r in matrix:
            if len(r) != length:
                raise ValueError("ragged generator matrix")
            rows.append(sum((b & 1) << i for i, b in enumerate(r)))
        return cls(length, rows)

    @property
    def dimension(self) -> int:
        return len(self.generators)

    k = dimension

    def matrix(self) -> list[list[int]]:
        return [[(r >> i) & 1 for i in range(self.length)] for r in self.generators]

    def format(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.matrix())

    def pivots(self) -> list[int]:
        return [_lowbit(r) for r in self.generators]

    def codewords(self) -> Iterator[int]:
        """All ``2^k`` codewords in Gray-code order, starting with 0."""
        word = 0
        yield word
        gens = self.generators
        for i in range(1, 1 << len(gens)):
            word ^= gens[_lowbit(i)]
            yield word

    def weight_distribution(self, cap: int | None = DEFAULT_DIM_CAP) -> list[int]:
        if cap is not None and self.dimension > cap:
            raise CapExceeded(f"codeword sweep limited to dimension {cap}")
        dist = [0] * (self.length + 1)
        for w in self.codewords():
            dist[w.bit_count()] += 1
        return dist

    def contains(self, word: int) -> bool:
        for r in self.generators:
            if word >> _lowbit(r) & 1:
                word ^= r
        return word == 0

    def __eq__(self, other):
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and self.generators == other.generators

    def __hash__(self):
        return hash((self.length, self.generators))

    def __repr__(self):
        return f"BinaryCode(n={self.length}, k={self.dimension})"


def code_from_matroid(m: Matroid) -> BinaryCode:
    """Row space of the matrix representing a binary matroid."""
    if not isinstance(m, BinaryMatroid):
        raise TypeError("code_from_matroid needs a binary matrix; "
                        "use incidence_matroid for graphs")
    rows = [sum(((c >> r) & 1) << e for e, c in enumerate(m.columns)) for r in range(m.nrows)]
    return BinaryCode(m.size, rows)


def weight_enumerator_enum(c: BinaryCode, cap: int | None = DEFAULT_DIM_CAP) -> Poly:
    """``sum over codewords of x^(n - wt) y^wt``."""
    n = c.length
    dist = c.weight_distribution(cap)
    return Poly({(n - w, w): a for w, a in enumerate(dist) if a}, 2)


def weight_enumerator_greene(m: BinaryMatroid, n: int | None = None,
                             tutte: Poly | None = None) -> Poly:
    """Weight enumerator of the code of ``m`` from its Tutte polynomial.

    With ``T = sum t_ab x^a y^b`` and ``k = r(E)``, substituting
    ``x = (x1+x2)/(x1-x2)`` and ``y = x1/x2`` and clearing denominators gives

        w = sum t_ab (x1+x2)^a (x1-x2)^(k-a) x1^b x2^(n-k-b).

    Every exponent is nonnegative because ``a <= k`` and ``b <= n - k`` for
    any Tutte polynomial, so no rational functions are formed.
    """
    n = m.size if n is None else n
    k = m.full_rank()
    if tutte is None:
        tutte = tutte_subset_expansion(m)
    plus = Poly({(1, 0): 1, (0, 1): 1}, 2)
    minus = Poly({(1, 0): 1, (0, 1): -1}, 2)
    total = Poly({}, 2)
    for (a, b), t in tutte.items():
        if a > k or b > n - k:
            raise ValueError("Tutte polynomial inconsistent with rank and size")
        term = (plus ** a) * (minus ** (k - a)) * Poly({(b, n - k - b): t}, 2)
        total = total + term
    return total


def weight_enumerator_subset_form(m: Matroid, n: int | None = None) -> Poly:
    """``sum over subsets A of 2^(k - r(A)) x2^(n - |A|) (x1 - x2)^|A|``."""
    n = m.size if n is None else n
    k = m.full_rank()
    minus = Poly({(1, 0): 1, (0, 1): -1}, 2)
    total = Poly({}, 2)
    for (r, a), cnt in rank_profile(m).items():
        total = total + (minus ** a) * Poly({(0, n - a): cnt * 2 ** (k - r)}, 2)
    return total


def dual(c: BinaryCode) -> BinaryCode:
    """Orthogonal complement under the standard dot product."""
    n = c.length
    pivots = c.pivots()
    pivset = set(pivots)
    rows = []
    for free in range(n):
        if free in pivset:
            continue
        v = 1 << free
        # in RREF, generator g has pivot p and free entries; x_p = sum over free f of g_f x_f
        for g, p in zip(c.generators, pivots):
            if g >> free & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(n, rows)


def is_self_orthogonal(c: BinaryCode) -> bool:
    gens = c.generators
    return all((a & b).bit_count() % 2 == 0 for i, a in enumerate(gens) for b in gens[i:])


def is_self_dual(c: BinaryCode) -> bool:
    return 2 * c.dimension == c.length and is_self_orthogonal(c)


def is_doubly_even(c: BinaryCode) -> bool:
    """All codeword weights divisible by 4.

    Checked on generators: ``wt(a+b) = wt(a) + wt(b) - 2 wt(a&b)``, so the
    property is closed under addition iff generators have weight 0 mod 4
    and pairwise even overlap.
    """
    gens = c.generators
    if any(g.bit_count() % 4 for g in gens):
        return False
    return all((a & b).bit_count() % 2 == 0 for i, a in enumerate(gens) for b in gens[i + 1:])


def replicate4(c: BinaryCode) -> BinaryCode:
    """Image under the coordinatewise map ``0 -> 0000``, ``1 -> 1111``."""
    rows = []
    for g in c.generators:
        v = 0
        for i in range(c.length):
            if g >> i & 1:
                v |= 0b1111 << (4 * i)
        rows.append(v)
    return BinaryCode(4 * c.length, rows)


def direct_sum(a: BinaryCode, b: BinaryCode) -> BinaryCode:
    return BinaryCode(a.length + b.length,
                      list(a.generators) + [g << a.length for g in b.generators])


def macwilliams_transform(w: Poly, size: int) -> Poly:
    """``w(x + y, x - y) / size``; equals the dual enumerator when ``size = |C|``."""
    plus = Poly({(1, 0): 1, (0, 1): 1}, 2)
    minus = Poly({(1, 0): 1, (0, 1): -1}, 2)
    out = w.substitute([plus, minus])
    terms = {}
    for e, v in out.items():
        if v % size:
            raise ArithmeticError("MacWilliams transform is not integral")
        terms[e] = v // size
    return Poly(terms, 2)
