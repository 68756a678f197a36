"""The open-curves input series, built from twisted configuration counts.

The degree-n input component records, cycle type by cycle type, how many
n-point configurations on the affine line are fixed by a permutation twist
of Frobenius over a field with q elements.  Each cycle of length d pins a
closed point of degree d (with d choices of alignment), and distinct cycles
need distinct closed points, so the count is a product of falling factorials
in the necklace numbers.  Quotienting by the affine group, whose order is
q(q - 1), and assembling the counts with weights 1/z_lambda yields the
graded character of the moduli of distinct points on the projective line
with one point pinned; purity lets q double as the grading variable t.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import omega_shifted
from .graded import GradedSeries
from .partitions import Partition, multiplicities, partitions_of, z_lambda
from .symseries import SymSeries
from .tpoly import TPoly, T_MINUS_ONE

QPoly = TPoly

_Q_QMINUS1 = TPoly((0, -1, 1))  # q(q - 1)


def _mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def necklace(d: int) -> QPoly:
    """Number of degree-d closed points of the affine line: (1/d) sum_{e|d} mu(e) q^{d/e}.

    The coefficients are rational (e.g. (q^2 - q)/2 at d = 2); only the
    values at prime powers are integers.
    """
    if d < 1:
        raise ValueError("d must be positive")
    coeffs = [Fraction(0)] * (d + 1)
    for e in range(1, d + 1):
        if d % e == 0:
            coeffs[d // e] += Fraction(_mobius(e), d)
    return QPoly(coeffs)


def twisted_count(lam: Partition) -> QPoly:
    """Configurations on the affine line fixed by a cycle-type-lam twist of
    Frobenius: prod over part sizes d of d^m_d * necklace(d) falling m_d.

    Grouping d^m_d into the falling factorial makes every factor
    d*necklace(d) - d*i an integer polynomial, and that integrality is
    asserted."""
    poly = QPoly.const(1)
    for d, m in multiplicities(lam).items():
        d_nd = necklace(d) * d
        for i in range(m):
            poly = poly * (d_nd - d * i)
    if not poly.has_integer_coeffs():
        raise ArithmeticError(f"twisted count of {lam} is not integral: {poly}")
    return poly


def m_component(n: int) -> SymSeries:
    """Degree-n component of the input series: sum over cycle types of
    twisted_count / (q(q-1)) * p_lambda / z_lambda, with q read as t."""
    if n < 2:
        raise ValueError("components start at n = 2")
    char = {}
    for lam in partitions_of(n):
        quotient = twisted_count(lam).divexact(_Q_QMINUS1)
        char[lam] = quotient
    return frobenius_like(n, char)


def frobenius_like(n: int, char: dict[Partition, TPoly]) -> SymSeries:
    acc = {}
    for lam, poly in char.items():
        z = z_lambda(lam)
        for k, c in enumerate(poly.coeffs):
            if c:
                acc[(lam, k)] = c / z
    return SymSeries(n, acc)


class MSeries(GradedSeries):
    """Graded input series with components 2..n_max; invariants checked on build."""

    def __init__(self, n_max: int, components: dict[int, SymSeries]):
        super().__init__(n_max, components)
        for n, comp in self.components.items():
            if comp.t_degree() > n - 2:
                raise ValueError(f"component {n} exceeds t-degree {n - 2}")
            expected = omega_shifted(n).divexact(T_MINUS_ONE)
            got = comp.p_coefficient((1,) * n) * factorial(n)
            if got != expected:
                raise ValueError(f"component {n} fails the rank-polynomial invariant")


def m_series(n_max: int) -> MSeries:
    """Input series with components 2..n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return MSeries(n_max, {n: m_component(n).truncate(n_max) for n in range(2, n_max + 1)})
