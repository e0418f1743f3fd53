"""Prime tables and prime-weighted state matrices.

``paper_weight_matrix`` indexes primes by ``P(n^(n*a(i,j)))``.  Those
indices grow very quickly, so values for ``n <= 3`` ship in a cache file and the
sieve is only run on demand.  ``admissible_matrix`` builds much smaller
matrices that still satisfy the separation inequalities needed to decode
pseudo state polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from sympy import nextprime

from .errors import CapExceeded
from .poly import Poly

__all__ = [
    "a_index",
    "nth_prime",
    "sieve_nth_prime",
    "primes_up_to",
    "load_prime_cache",
    "WeightMatrix",
    "AdmissibilityCertificate",
    "paper_weight_matrix",
    "admissible_matrix",
    "verify_admissible",
    "entry_order",
    "DEFAULT_PRIME_CAP",
]

DEFAULT_PRIME_CAP = 400_000_000
_SEGMENT = 1 << 22


def a_index(i: int, j: int) -> int:
    """``i(i+1)/2 + (j - i)``; enumerates the pairs ``i >= j`` as 1, 2, 3, ..."""
    return i * (i + 1) // 2 + (j - i)


def entry_order(n: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)``, ``1 <= j <= i <= n``, in increasing ``a_index`` order."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


def primes_up_to(limit: int) -> np.ndarray:
    """All primes ``<= limit`` (odd-only sieve of Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    size = (limit - 1) // 2  # index k stands for 2k+1, k >= 1
    sieve = np.ones(size + 1, dtype=bool)
    sieve[0] = False
    for k in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if sieve[k]:
            p = 2 * k + 1
            sieve[(p * p) // 2::p] = False
    odd = 2 * np.nonzero(sieve)[0] + 1
    return np.concatenate(([2], odd)).astype(np.int64)


def _upper_bound(ell: int) -> int:
    # p_n < n(ln n + ln ln n) for n >= 6 (Rosser-Schoenfeld)
    if ell < 6:
        return 13
    return int(ell * (math.log(ell) + math.log(math.log(ell)))) + 1


def sieve_nth_prime(ell: int, progress=None) -> int:
    """The ``ell``-th prime by a segmented odd-only sieve.

    Memory stays at one segment plus the base primes up to ``sqrt(bound)``.
    ``progress``, if given, is called with the running prime count after
    each segment.
    """
    if ell < 1:
        raise ValueError("prime index must be positive")
    if ell == 1:
        return 2
    bound = _upper_bound(ell)
    base = primes_up_to(math.isqrt(bound) + 1)[1:]  # odd base primes
    count = 1  # the prime 2
    # segment covers odd numbers lo, lo+2, ..., lo + 2*(seg-1)
    lo = 3
    while lo <= bound:
        seg = min(_SEGMENT, (bound - lo) // 2 + 1)
        hi = lo + 2 * (seg - 1)
        mark = np.ones(seg, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start > hi:
                continue
            mark[(start - lo) // 2::p] = False
        found = int(mark.sum())
        if count + found >= ell:
            idx = np.nonzero(mark)[0][ell - count - 1]
            return lo + 2 * int(idx)
        count += found
        if progress is not None:
            progress(count)
        lo = hi + 2
    raise AssertionError("prime bound too small")  # pragma: no cover


@lru_cache(maxsize=None)
def load_prime_cache(path: str | None = None) -> dict[int, int]:
    """Read ``<index> <prime>`` lines; the bundled cache when no path is given."""
    if path is None:
        text = resources.files("tuttetheta").joinpath("data/prime_cache.txt").read_text()
    else:
        text = Path(path).read_text()
    table: dict[int, int] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        idx, p = line.split()
        table[int(idx)] = int(p)
    return table


def nth_prime(ell: int, cap: int = DEFAULT_PRIME_CAP, use_cache: bool = True) -> int:
    """``P(ell)`` with ``P(1) = 2``; cached values are consulted first."""
    if ell < 1:
        raise ValueError("prime index must be positive")
    if use_cache:
        cached = load_prime_cache().get(ell)
        if cached is not None:
            return cached
    if ell > cap:
        raise CapExceeded(f"P({ell}) exceeds the sieve cap {cap}; raise --prime-cap to compute it")
    return sieve_nth_prime(ell)


@dataclass(frozen=True)
class WeightMatrix:
    """Symmetric ``n x n`` matrix whose ``(i, j)`` entry is ``p x^p``.

    ``primes`` is keyed by pairs ``(i, j)`` with ``i >= j`` (1-indexed).
    """

    n: int
    primes: dict = field(hash=False)
    kind: str = "custom"

    def __post_init__(self):
        expected = set(entry_order(self.n))
        if set(self.primes) != expected:
            raise ValueError("weight matrix must have one prime per pair i >= j")
        if len(set(self.primes.values())) != len(self.primes):
            raise ValueError("weight matrix primes must be pairwise distinct")

    def prime(self, i: int, j: int) -> int:
        return self.primes[(i, j) if i >= j else (j, i)]

    def entry(self, i: int, j: int) -> Poly:
        p = self.prime(i, j)
        return Poly({(p,): p}, 1)

    @property
    def reverse_index(self) -> dict[int, tuple[int, int]]:
        """prime -> ``(i, j)`` with ``i >= j``."""
        return {p: ij for ij, p in self.primes.items()}

    def chain(self) -> list[int]:
        return [self.primes[ij] for ij in entry_order(self.n)]

    def rows(self) -> list[list[int]]:
        return [[self.prime(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def format(self) -> str:
        width = max(len(f"{p}x^{p}") for p in self.primes.values())
        lines = []
        for row in self.rows():
            lines.append("  ".join(f"{p}x^{p}".rjust(width) for p in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"n": self.n, "kind": self.kind,
                "entries": [[i, j, str(p)] for (i, j), p in sorted(self.primes.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "WeightMatrix":
        primes = {(int(i), int(j)): int(p) for i, j, p in data["entries"]}
        return cls(int(data["n"]), primes, data.get("kind", "custom"))


@dataclass(frozen=True)
class AdmissibilityCertificate:
    m: int
    n: int
    chain: tuple
    floor: int

    def holds(self) -> bool:
        return verify_admissible(self.chain, self.m, self.n)


def verify_admissible(chain, m: int, n: int) -> bool:
    """Check the decoding inequalities on primes listed in entry order.

    ``m*p(i,i) < p(i+1,1)`` and ``m*p(i,j-1) < p(i,j)`` say that each prime
    exceeds ``m`` times its predecessor; additionally every prime must be
    larger than ``max(3m, n)``.
    """
    chain = list(chain)
    if len(chain) != n * (n + 1) // 2:
        return False
    if len(set(chain)) != len(chain):
        return False
    if chain and chain[0] <= max(3 * m, n):
        return False
    for prev, nxt in zip(chain, chain[1:]):
        if not m * prev < nxt:
            return False
    return all(_is_probable_prime(p) for p in chain)


def _is_probable_prime(p: int) -> bool:
    from sympy import isprime
    return isprime(p)


def paper_weight_matrix(n: int, cap: int = DEFAULT_PRIME_CAP) -> WeightMatrix:
    """The matrix with ``(i, j)`` entry ``P(n^(n a(i,j))) x^P(...)``."""
    if n < 1:
        raise ValueError("n must be positive")
    primes = {}
    for i, j in entry_order(n):
        primes[(i, j)] = nth_prime(n ** (n * a_index(i, j)), cap=cap)
    return WeightMatrix(n, primes, kind="paper")


def admissible_matrix(m: int, n: int) -> tuple[WeightMatrix, AdmissibilityCertificate]:
    """Smallest greedy prime chain satisfying the separation inequalities
    for graphs with at most ``m`` edges, with ``n`` states."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    floor = max(3 * m, n)
    chain = []
    prev = None
    for _ in entry_order(n):
        lower = floor if prev is None else max(floor, m * prev)
        p = nextprime(lower)
        chain.append(p)
        prev = p
    primes = dict(zip(entry_order(n), chain))
    w = WeightMatrix(n, primes, kind="admissible")
    cert = AdmissibilityCertificate(m, n, tuple(chain), floor)
    if not cert.holds():  # pragma: no cover - construction guarantees it
        raise AssertionError("greedy chain failed verification")
    return w, cert
