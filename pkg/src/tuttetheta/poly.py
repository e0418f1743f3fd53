"""Exact sparse polynomials and truncated q-series.

``Poly`` stores a map from exponent tuples to nonzero Python ints, so both
coefficients and exponents are arbitrary precision.  ``QSeries`` stores the
coefficients of a series in ``q`` on a grid of quarter-integer exponents,
truncated at a fixed precision.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

__all__ = [
    "Poly",
    "QSeries",
    "poly_add",
    "poly_mul",
    "series_mul",
    "univariate",
    "bivariate",
]


class Poly:
    """Sparse polynomial in ``nvars`` variables with integer coefficients.

    Instances are treated as immutable.  ``names`` only affects printing;
    two polynomials with the same arity and term map compare equal.
    """

    __slots__ = ("nvars", "_terms", "names")

    def __init__(self, terms: Mapping[tuple, int] | None = None, nvars: int = 1,
                 names: Sequence[str] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} has wrong arity for {nvars} variables")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                coeff = int(coeff)
                if coeff:
                    clean[exps] = clean.get(exps, 0) + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.nvars = nvars
        self._terms = clean
        if names is not None:
            names = tuple(names)
            if len(names) != nvars:
                raise ValueError("names must match nvars")
        self.names = names

    # construction helpers

    @classmethod
    def constant(cls, c: int, nvars: int = 1, names=None) -> "Poly":
        return cls({(0,) * nvars: c}, nvars, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, names=None) -> "Poly":
        exps = tuple(exps)
        return cls({exps: coeff}, len(exps), names)

    @classmethod
    def variable(cls, index: int, nvars: int, names=None) -> "Poly":
        exps = [0] * nvars
        exps[index] = 1
        return cls({tuple(exps): 1}, nvars, names)

    def _like(self, terms) -> "Poly":
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out._terms = terms
        out.names = self.names
        return out

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coeff(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms as ``(exps, coeff)`` pairs, exponent vectors descending."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # arithmetic

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly.constant(other, self.nvars)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._like({})
            return self._like({k: v * other for k, v in self._terms.items()})
        self._check(other)
        out: dict = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
        return self._like({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # evaluation

    def evaluate(self, values: Sequence):
        """Evaluate at a point; values may be ints, Fractions, or anything
        closed under ``*`` and ``+`` with ints."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for exps, c in self._terms.items():
            t = c
            for v, e in zip(values, exps):
                if e:
                    t = t * v ** e
            total = total + t
        return total

    def substitute(self, values: Sequence["Poly"]) -> "Poly":
        """Replace variable ``i`` by the polynomial ``values[i]``."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of substitutions")
        if not values:
            return self
        target = values[0].nvars
        for v in values:
            if v.nvars != target:
                raise ValueError("substituted polynomials must share arity")
        result = Poly({}, target, values[0].names)
        powers: list[dict] = [{} for _ in values]
        for exps, c in self._terms.items():
            t = Poly.constant(c, target)
            for i, e in enumerate(exps):
                if e:
                    if e not in powers[i]:
                        powers[i][e] = values[i] ** e
                    t = t * powers[i][e]
            result = result + t
        return result

    # text and json

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or self.names or _default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = []
            for name, e in zip(names, exps):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            body = "*".join(mono)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r}, nvars={self.nvars})"

    def to_json(self) -> list:
        return [{"coeff": str(c), "exps": [str(e) for e in exps]}
                for exps, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None, names=None) -> "Poly":
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be a list of terms")
        terms: dict = {}
        for item in data:
            exps = tuple(int(e) for e in item["exps"])
            if nvars is None:
                nvars = len(exps)
            terms[exps] = terms.get(exps, 0) + int(item["coeff"])
        return cls(terms, nvars if nvars is not None else 0, names)


def _default_names(nvars: int) -> tuple:
    if nvars == 1:
        return ("x",)
    if nvars == 2:
        return ("x", "y")
    return tuple(f"x{i}" for i in range(nvars))


def univariate(terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> Poly:
    """Build a one-variable polynomial from ``{exponent: coeff}``."""
    items = terms.items() if isinstance(terms, Mapping) else terms
    return Poly({(e,): c for e, c in items}, 1)


def bivariate(terms: Mapping[tuple[int, int], int]) -> Poly:
    return Poly(dict(terms), 2)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


class QSeries:
    """Truncated series ``sum c_k q^(k/4)`` for ``0 <= k <= precision``.

    Exponents are stored as integer counts of quarters.  Coefficients
    beyond the precision are discarded by every operation.
    """

    __slots__ = ("precision", "_coeffs")

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] | None, precision: int):
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        self.precision = precision
        arr = [0] * (precision + 1)
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for k, c in items:
                k = int(k)
                if k < 0:
                    raise ValueError("negative exponent")
                if k <= precision:
                    arr[k] += int(c)
        self._coeffs = arr

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        return cls([1], precision)

    @property
    def coeffs(self) -> list:
        return list(self._coeffs)

    def __getitem__(self, k: int) -> int:
        """Coefficient of ``q^(k/4)``."""
        return self._coeffs[k] if 0 <= k <= self.precision else 0

    def nonzero(self) -> dict:
        return {k: c for k, c in enumerate(self._coeffs) if c}

    def truncate(self, precision: int) -> "QSeries":
        if precision > self.precision:
            raise ValueError("cannot raise precision of a truncated series")
        return QSeries(self._coeffs[: precision + 1], precision)

    def _check(self, other):
        if not isinstance(other, QSeries):
            raise TypeError(f"expected QSeries, got {type(other).__name__}")
        if other.precision != self.precision:
            raise ValueError(f"precision mismatch: {self.precision} vs {other.precision}")

    def __add__(self, other):
        self._check(other)
        return QSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self.precision)

    def __sub__(self, other):
        self._check(other)
        return QSeries([a - b for a, b in zip(self._coeffs, other._coeffs)], self.precision)

    def __neg__(self):
        return QSeries([-a for a in self._coeffs], self.precision)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([a * other for a in self._coeffs], self.precision)
        self._check(other)
        n = self.precision
        a, b = self._coeffs, other._coeffs
        out = [0] * (n + 1)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            lim = n - i
            for j, y in bnz:
                if j > lim:
                    break
                out[i + j] += x * y
        return QSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = QSeries.one(self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d: int) -> "QSeries":
        for c in self._coeffs:
            if c % d:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
        return QSeries([c // d for c in self._coeffs], self.precision)

    def scale_exponents(self, factor: int, precision: int | None = None) -> "QSeries":
        """Series in ``q^factor``: the coefficient at k moves to ``factor*k``."""
        precision = self.precision if precision is None else precision
        return QSeries({k * factor: c for k, c in enumerate(self._coeffs) if c}, precision)

    def __eq__(self, other):
        """Equality up to the smaller of the two precisions."""
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    __hash__ = None

    def format(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                mono = ""
            elif k % 4 == 0:
                mono = "q" if k == 4 else f"q^{k // 4}"
            elif k % 2 == 0:
                mono = f"q^({k // 2}/2)"
            else:
                mono = f"q^({k}/4)"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        body = " + ".join(parts) if parts else "0"
        return body.replace("+ -", "- ") + f" + O(q^({self.precision + 1}/4))"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QSeries({self.nonzero()}, precision={self.precision})"

    def to_json(self) -> dict:
        return {"precision_quarters": self.precision,
                "coeffs": {str(k): str(c) for k, c in enumerate(self._coeffs) if c}}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        return cls({int(k): int(c) for k, c in data["coeffs"].items()},
                   int(data["precision_quarters"]))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b
