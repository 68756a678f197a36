"""Truncated symmetric functions over Q[t] in the power-sum basis.

A SymSeries is a finite collection of terms ``(lambda, k) -> coefficient``
standing for ``sum coeff * t^k * p_lambda``, where ``lambda`` is a partition
and coefficients are exact rationals.  Every series carries a truncation
degree ``n_max``: terms whose partition size exceeds it are discarded eagerly
by all operations, so a series is a faithful representative of its image in
the quotient by symmetric-function degree > n_max.  t-exponents are never
truncated.

The power-sum basis is the canonical internal form because both plethysm and
the Frobenius characteristic are diagonal there; complete homogeneous and
Schur inputs are converted on construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import Partition, check_partition, merge, partitions_of, z_lambda
from .tpoly import TPoly

Term = tuple[Partition, int]

# term order for serialization: degree, then partition reverse-lex, then t-exponent
def term_sort_key(term: Term):
    parts, k = term
    return (sum(parts), tuple(-p for p in parts), k)


class SymSeries:
    """Element of Q[t][p_1, p_2, ...] truncated at symmetric-function degree n_max."""

    __slots__ = ("n_max", "terms")

    def __init__(self, n_max: int, terms: dict[Term, Fraction] | None = None):
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.n_max = n_max
        clean: dict[Term, Fraction] = {}
        if terms:
            for (parts, k), c in terms.items():
                c = Fraction(c)
                if c == 0 or sum(parts) > n_max:
                    continue
                if k < 0:
                    raise ValueError("negative t-exponent")
                clean[(check_partition(parts), k)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_max: int) -> "SymSeries":
        return cls(n_max)

    @classmethod
    def one(cls, n_max: int) -> "SymSeries":
        return cls(n_max, {((), 0): Fraction(1)})

    @classmethod
    def p(cls, parts: Partition | int, n_max: int | None = None) -> "SymSeries":
        """The power-sum monomial p_lambda (an int means the single part (n))."""
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(parts)
        if n_max is None:
            n_max = sum(parts)
        return cls(n_max, {(parts, 0): Fraction(1)})

    @classmethod
    def h(cls, n: int, n_max: int | None = None) -> "SymSeries":
        """Complete homogeneous h_n = sum over partitions of p_lambda / z_lambda."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n_max is None:
            n_max = n
        return cls(n_max, {(lam, 0): Fraction(1, z_lambda(lam)) for lam in partitions_of(n)})

    # -- basic structure ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymSeries)
            and self.n_max == other.n_max
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, parts: Partition, k: int) -> Fraction:
        return self.terms.get((tuple(parts), k), Fraction(0))

    def p_coefficient(self, parts: Partition) -> TPoly:
        """All t-exponents of one p-monomial collected into a polynomial."""
        parts = tuple(parts)
        coeffs: dict[int, Fraction] = {}
        for (lam, k), c in self.terms.items():
            if lam == parts:
                coeffs[k] = c
        if not coeffs:
            return TPoly()
        return TPoly([coeffs.get(i, Fraction(0)) for i in range(max(coeffs) + 1)])

    def homogeneous_part(self, n: int) -> "SymSeries":
        """Terms of symmetric-function degree exactly n (keeps n_max)."""
        return SymSeries(
            self.n_max, {tk: c for tk, c in self.terms.items() if sum(tk[0]) == n}
        )

    def degrees(self) -> set[int]:
        return {sum(parts) for (parts, _k) in self.terms}

    def is_homogeneous(self, n: int) -> bool:
        return all(sum(parts) == n for (parts, _k) in self.terms)

    def t_degree(self) -> int:
        """Largest t-exponent present; -1 for the zero series."""
        return max((k for (_parts, k) in self.terms), default=-1)

    def truncate(self, n_max: int) -> "SymSeries":
        if n_max >= self.n_max:
            return SymSeries(n_max, self.terms)
        return SymSeries(n_max, {tk: c for tk, c in self.terms.items() if sum(tk[0]) <= n_max})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "SymSeries":
        if isinstance(other, (int, Fraction)):
            other = SymSeries(self.n_max, {((), 0): Fraction(other)})
        if not isinstance(other, SymSeries):
            return NotImplemented
        n_max = min(self.n_max, other.n_max)
        acc = dict(self.terms)
        for tk, c in other.terms.items():
            s = acc.get(tk, Fraction(0)) + c
            if s:
                acc[tk] = s
            else:
                acc.pop(tk, None)
        return SymSeries(n_max, acc)

    __radd__ = __add__

    def __neg__(self) -> "SymSeries":
        return SymSeries(self.n_max, {tk: -c for tk, c in self.terms.items()})

    def __sub__(self, other) -> "SymSeries":
        return self + (-other if isinstance(other, SymSeries) else -Fraction(other))

    def __mul__(self, other) -> "SymSeries":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return SymSeries(self.n_max, {tk: c * other for tk, c in self.terms.items()})
        if isinstance(other, TPoly):
            acc: dict[Term, Fraction] = {}
            for (parts, k), c in self.terms.items():
                for i, ci in enumerate(other.coeffs):
                    if ci:
                        key = (parts, k + i)
                        acc[key] = acc.get(key, Fraction(0)) + c * ci
            return SymSeries(self.n_max, acc)
        if not isinstance(other, SymSeries):
            return NotImplemented
        return _mul_series(self, other)

    __rmul__ = __mul__

    def t_shift(self, k: int) -> "SymSeries":
        """Multiply by t^k."""
        return SymSeries(self.n_max, {(parts, e + k): c for (parts, e), c in self.terms.items()})

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Term, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: term_sort_key(item[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymSeries(n_max={self.n_max}, 0)"
        bits = []
        for (parts, k), c in self.sorted_terms():
            t = "" if k == 0 else ("*t" if k == 1 else f"*t^{k}")
            bits.append(f"{c}*p{list(parts)}{t}")
        return f"SymSeries(n_max={self.n_max}, {' + '.join(bits)})"


def _mul_series(a: SymSeries, b: SymSeries) -> SymSeries:
    n_max = min(a.n_max, b.n_max)
    # bucket by degree so pairs beyond the truncation are never formed
    def buckets(s: SymSeries):
        by_deg: dict[int, list[tuple[Partition, int, Fraction]]] = {}
        for (parts, k), c in s.terms.items():
            d = sum(parts)
            if d <= n_max:
                by_deg.setdefault(d, []).append((parts, k, c))
        return by_deg

    ba, bb = buckets(a), buckets(b)
    acc: dict[Term, Fraction] = {}
    for da, items_a in ba.items():
        for db, items_b in bb.items():
            if da + db > n_max:
                continue
            for pa, ka, ca in items_a:
                for pb, kb, cb in items_b:
                    key = (merge(pa, pb), ka + kb)
                    v = acc.get(key)
                    acc[key] = ca * cb if v is None else v + ca * cb
    return SymSeries(n_max, acc)


# -- degree-scaling and plethysm ------------------------------------------


def psi(k: int, f: SymSeries) -> SymSeries:
    """Adams-type operation: t-exponent e -> k*e and every part d -> k*d."""
    if k < 1:
        raise ValueError("psi index must be positive")
    if k == 1:
        return f
    acc: dict[Term, Fraction] = {}
    for (parts, e), c in f.terms.items():
        if k * sum(parts) > f.n_max:
            continue
        key = (tuple(k * p for p in parts), k * e)
        acc[key] = acc.get(key, Fraction(0)) + c
    return SymSeries(f.n_max, acc)


class PlethysmCache:
    """Reusable per-inner-series state: psi images and partition products.

    All plethysms against one fixed inner series g share the expensive
    pieces: the products prod_i psi(lambda_i, g) depend only on g and the
    partition, not on the outer series.
    """

    def __init__(self, g: SymSeries):
        if g.coefficient((), 0) != 0:
            raise ValueError("inner series of a plethysm must have no constant term")
        self.g = g
        self._psi: dict[int, SymSeries] = {}
        self._prod: dict[Partition, SymSeries] = {(): SymSeries.one(g.n_max)}

    def psi_of(self, k: int) -> SymSeries:
        s = self._psi.get(k)
        if s is None:
            s = self._psi[k] = psi(k, self.g)
        return s

    def product(self, parts: Partition) -> SymSeries:
        s = self._prod.get(parts)
        if s is None:
            s = self._prod[parts] = self.product(parts[1:]) * self.psi_of(parts[0])
        return s


def plethysm(f: SymSeries, g: SymSeries, cache: PlethysmCache | None = None) -> SymSeries:
    """Plethysm f o g: substitute p_k -> psi(k, g); t-powers of f are scalars.

    g must have no constant term.  The result is truncated at
    min(f.n_max, g.n_max).
    """
    if cache is None or cache.g is not g:
        cache = PlethysmCache(g)
    n_max = min(f.n_max, g.n_max)
    acc: dict[Term, Fraction] = {}
    for (parts, e), c in f.terms.items():
        if sum(parts) > n_max:
            continue
        for (q_parts, k), d in cache.product(parts).terms.items():
            if sum(q_parts) > n_max:
                continue
            key = (q_parts, k + e)
            v = acc.get(key)
            acc[key] = c * d if v is None else v + c * d
    return SymSeries(n_max, acc)


# -- Frobenius characteristic and the rank specialization ------------------


def frobenius_from_character(n: int, char: dict[Partition, TPoly | int | Fraction]) -> SymSeries:
    """Symmetric function of a (graded) character: sum char(lambda) p_lambda / z_lambda.

    ``char`` must assign a value (a polynomial in t for graded characters) to
    every partition of n.
    """
    acc: dict[Term, Fraction] = {}
    for lam in partitions_of(n):
        if lam not in char:
            raise KeyError(f"character value missing for cycle type {lam}")
        val = char[lam]
        if not isinstance(val, TPoly):
            val = TPoly.const(val)
        z = z_lambda(lam)
        for k, c in enumerate(val.coeffs):
            if c:
                acc[(lam, k)] = c / z
    return SymSeries(n, acc)


def rk(f: SymSeries) -> dict[int, TPoly]:
    """Dimension extraction: p_1 -> x, p_n -> 0 for n > 1.

    Returns, for each n with a surviving term, n! times the coefficient of
    p_(1^n) as a polynomial in t; for the characteristic of a representation
    this is its dimension.
    """
    by_n: dict[int, dict[int, Fraction]] = {}
    for (parts, k), c in f.terms.items():
        if all(p == 1 for p in parts):
            n = len(parts)
            by_n.setdefault(n, {})[k] = by_n.get(n, {}).get(k, Fraction(0)) + c
    out: dict[int, TPoly] = {}
    for n, coeffs in by_n.items():
        fact = factorial(n)
        poly = TPoly([coeffs.get(i, Fraction(0)) * fact for i in range(max(coeffs) + 1)])
        if poly:
            out[n] = poly
    return out
