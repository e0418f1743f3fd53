"""Construction A lattices and theta series.

Series are in ``q = exp(pi i z)``, so ``theta_L = sum q^(x, x)`` and even
lattices have even integer exponents.  Precisions are counted in quarter
units of ``q`` (see ``QSeries``).

For ``L_C = {x in Z^n : x mod 2 in C} / sqrt(2)`` a coordinate ``x_i``
contributes ``x_i^2 / 2`` to the norm, which is ``2 j^2`` for even and
``2 (j + 1/2)^2`` for odd entries.  Hence

    theta_{L_C}(q) = w_C(theta3(q^2), theta2(q^2))

with ``theta3(q) = sum q^(n^2)`` and ``theta2(q) = sum q^((n+1/2)^2)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .codes import BinaryCode, weight_enumerator_enum
from .errors import CapExceeded
from .poly import Poly, QSeries

__all__ = [
    "theta2",
    "theta3",
    "eisenstein_e4",
    "eisenstein_e6",
    "delta",
    "divisor_sigma",
    "evaluate_enumerator",
    "theta_from_code",
    "theta_direct",
    "construction_a_basis",
    "gram_matrix",
    "gram_determinant",
    "DIRECT_LENGTH_CAP",
    "DIRECT_NORM_CAP",
]

DIRECT_LENGTH_CAP = 12
DIRECT_NORM_CAP = 6


def theta3(precision: int) -> QSeries:
    """``sum over n in Z of q^(n^2)``."""
    coeffs = {0: 1}
    j = 1
    while 4 * j * j <= precision:
        coeffs[4 * j * j] = 2
        j += 1
    return QSeries(coeffs, precision)


def theta2(precision: int) -> QSeries:
    """``sum over n in Z + 1/2 of q^(n^2)``."""
    coeffs = {}
    j = 0
    while (2 * j + 1) ** 2 <= precision:
        coeffs[(2 * j + 1) ** 2] = 2
        j += 1
    return QSeries(coeffs, precision)


def divisor_sigma(k: int, n: int) -> int:
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
    return total


def _eisenstein(precision: int, scale: int, power: int) -> QSeries:
    # 1 + scale * sum sigma_power(n) q^(2n); q^(2n) sits at 8n quarters
    coeffs = {0: 1}
    n = 1
    while 8 * n <= precision:
        coeffs[8 * n] = scale * divisor_sigma(power, n)
        n += 1
    return QSeries(coeffs, precision)


def eisenstein_e4(precision: int) -> QSeries:
    return _eisenstein(precision, 240, 3)


def eisenstein_e6(precision: int) -> QSeries:
    return _eisenstein(precision, -504, 5)


def delta(precision: int) -> QSeries:
    """``(E4^3 - E6^2) / 1728``, divided exactly."""
    e4, e6 = eisenstein_e4(precision), eisenstein_e6(precision)
    return (e4 ** 3 - e6 ** 2).exact_div(1728)


def evaluate_enumerator(w: Poly, a: QSeries, b: QSeries) -> QSeries:
    """Substitute series ``a`` for ``x`` and ``b`` for ``y`` in ``w(x, y)``."""
    if w.nvars != 2:
        raise ValueError("expected a bivariate polynomial")
    prec = a.precision
    apow: dict = {}
    bpow: dict = {}

    def power(cache, base, k):
        if k not in cache:
            cache[k] = base ** k
        return cache[k]

    total = QSeries(None, prec)
    for (i, j), c in w.items():
        total = total + power(apow, a, i) * power(bpow, b, j) * c
    return total


def theta_from_code(c: BinaryCode, precision: int, weight_enumerator: Poly | None = None) -> QSeries:
    """Theta series of ``L_C`` from the weight enumerator of ``C``."""
    w = weight_enumerator if weight_enumerator is not None else weight_enumerator_enum(c)
    # theta(q^2): exponents double, so only precision/2 quarters of the base series matter
    half = precision // 2
    t3 = theta3(half).scale_exponents(2, precision)
    t2 = theta2(half).scale_exponents(2, precision)
    return evaluate_enumerator(w, t3, t2)


def theta_direct(c: BinaryCode, precision: int, length_cap: int = DIRECT_LENGTH_CAP,
                 norm_cap: int = DIRECT_NORM_CAP) -> QSeries:
    """Theta series of ``L_C`` by enumerating lattice vectors.

    Counts integer vectors ``x`` with ``x mod 2`` in ``C`` and
    ``|x|^2 / 2 <= precision / 4``.  In quarter units the norm of ``x`` is
    ``2 |x|^2``.  Coordinates are bounded by ``|x_i|^2 <= precision / 2``;
    partial sums prune the box as the recursion descends.
    """
    n = c.length
    if n > length_cap:
        raise CapExceeded(f"direct enumeration limited to length {length_cap}")
    if precision > 4 * norm_cap:
        raise CapExceeded(f"direct enumeration limited to norm {norm_cap}")
    budget = precision // 2  # max |x|^2
    bound = math.isqrt(budget)
    counts = [0] * (precision + 1)
    vals = range(-bound, bound + 1)

    def rec(i, sq, parity):
        if i == n:
            if c.contains(parity):
                counts[2 * sq] += 1
            return
        for v in vals:
            s = sq + v * v
            if s <= budget:
                rec(i + 1, s, parity | ((v & 1) << i))

    rec(0, 0, 0)
    return QSeries(counts, precision)


def construction_a_basis(c: BinaryCode) -> list[list[int]]:
    """Integer basis (before the ``1/sqrt 2`` scaling) of ``{x : x mod 2 in C}``.

    Generators in reduced echelon form cover their pivot coordinates;
    ``2 e_j`` covers the others.  The matrix is triangular up to a column
    permutation with determinant ``2^(n - k)``.
    """
    n = c.length
    pivots = set(c.pivots())
    basis = [[(g >> i) & 1 for i in range(n)] for g in c.generators]
    for j in range(n):
        if j not in pivots:
            basis.append([2 if i == j else 0 for i in range(n)])
    return basis


def gram_matrix(c: BinaryCode) -> list[list[Fraction]]:
    b = construction_a_basis(c)
    return [[Fraction(sum(x * y for x, y in zip(u, v)), 2) for v in b] for u in b]


def gram_determinant(c: BinaryCode) -> Fraction:
    """Determinant of the Gram matrix of ``L_C``, by exact elimination."""
    a = [row[:] for row in gram_matrix(c)]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return det
