"""Self-verification suite behind the ``verify`` subcommand.

Each check raises AssertionError with a readable message on failure; the
runner reports one status line per check and stops nothing, so a single run
shows everything that is broken.  Order matters only cosmetically: the
cheapest, most diagnostic checks come first.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from . import combinat
from .characters import character_table, schur_expand
from .combinat import bell_partial, omega, omega_shifted
from .leveltrees import (
    chain_counts_by_length,
    enumerate_level_trees,
    epoly_Bn,
    level_tree_census,
    unprune,
)
from .partitions import partitions_of
from .pointcounts import m_series, twisted_count
from .reference import REFERENCE_TABLE
from .serialize import schur_table_from_obj, schur_table_to_obj, series_from_obj, series_to_obj
from .solver import (
    euler_chars,
    hnum_bell,
    hnum_from_solver,
    hnum_lattice,
    hnum_stirling,
    level_filtration,
    solve_B,
    verify_functional_equation,
)
from .symseries import SymSeries, plethysm
from .tpoly import TPoly, T_MINUS_ONE


def check_stirling_bell_identity(max_n: int):
    for n in range(1, min(max_n, 12) + 1):
        for k in range(1, n + 1):
            assert combinat.stirling_bell_identity_check(n, k), (
                f"Stirling-Bell identity fails at (n, k) = ({n}, {k})"
            )


def check_stirling_inversion(max_n: int):
    top = min(max_n, 12)
    for n in range(top + 1):
        for k in range(top + 1):
            total = sum(
                combinat.stirling_first_signed(n, j) * combinat.stirling_second(j, k)
                for j in range(k, n + 1)
            )
            expected = 1 if n == k else 0
            assert total == expected, f"triangle inversion fails at ({n}, {k}): {total}"


def check_bell_limit(max_n: int):
    for n in range(2, min(max_n, 12) + 1):
        for k in range(1, n):
            poly = bell_partial(n, k, [omega_shifted(i) for i in range(1, n - k + 2)])
            value = poly.divexact(T_MINUS_ONE).eval(1)
            expected = Fraction(
                factorial(n) * (-1) ** (n - k - 1) * factorial(n - k - 1),
                factorial(k - 1) * factorial(n - k + 1),
            )
            assert value == expected, f"Bell limit at t=1 fails at ({n}, {k}): {value}"


def check_omega_closed_form(max_n: int):
    for n in range(1, max_n + 1):
        closed = TPoly.const(1)
        for i in range(n - 1):
            closed = closed * TPoly((-i, 1))
        assert omega(n) == closed, f"omega({n}) differs from its closed form"


def check_plethysm_spots(max_n: int):
    for a in range(1, 7):
        for b in range(1, 7):
            lhs = plethysm(SymSeries.p(a, a * b), SymSeries.p(b, a * b))
            assert lhs == SymSeries.p(a * b), f"p_{a} o p_{b} != p_{a*b}"
    h2 = SymSeries.h(2, 4)
    expected = SymSeries(
        4,
        {
            ((1, 1, 1, 1), 0): Fraction(1, 8),
            ((2, 1, 1), 0): Fraction(2, 8),
            ((2, 2), 0): Fraction(3, 8),
            ((4,), 0): Fraction(2, 8),
        },
    )
    assert plethysm(h2, h2) == expected, "h_2 o h_2 has the wrong expansion"


def check_input_rank_polys(max_n: int):
    M = m_series(max(max_n, 2))
    for n in range(2, max_n + 1):
        got = M.component(n).p_coefficient((1,) * n) * factorial(n)
        expected = omega_shifted(n).divexact(T_MINUS_ONE)
        assert got == expected, f"input component {n} fails the rank-polynomial identity"


def check_input_integrality(max_n: int):
    top = min(max_n, 8)
    M = m_series(max(top, 2))
    for n in range(2, top + 1):
        table = schur_expand(M.component(n), n)
        for lam, poly in table.items():
            assert poly.has_integer_coeffs(), f"component {n}: s_{lam} coefficient not integral"
            top_coeff = poly[n - 2]
            assert top_coeff == (1 if lam == (n,) else 0), (
                f"component {n}: top t-weight is not the trivial representation"
            )


def check_twisted_counts(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        for lam in partitions_of(n):
            poly = twisted_count(lam)
            for q in (2, 3, 4, 5):
                v = poly.eval(q)
                assert v == int(v) and v >= 0, f"twisted count {lam} at q={q}: {v}"


def check_functional_equation(max_n: int):
    M = m_series(max_n)
    B = solve_B(M)
    assert verify_functional_equation(B, M), "functional equation residual is nonzero"
    assert B.component(2) == SymSeries.h(2, max_n), "degree-2 component is not h_2"


def check_reference_table(max_n: int):
    B = solve_B(m_series(max(max_n, 2)))
    for n in range(2, min(max_n, 6) + 1):
        got = schur_expand(B.component(n), n)
        want = {lam: TPoly(cs) for lam, cs in REFERENCE_TABLE[n].items()}
        assert got == want, f"table row {n} deviates from the reference values"


def check_numeric_routes(max_n: int):
    B = solve_B(m_series(max_n))
    routes = {
        "solver": hnum_from_solver(B).hnum,
        "stirling": hnum_stirling(max_n).hnum,
        "bell": hnum_bell(max_n).hnum,
        "lattice": hnum_lattice(min(max_n, 10)).hnum,
    }
    for n in range(1, max_n + 1):
        values = {name: h[n] for name, h in routes.items() if n in h}
        distinct = {tuple(p.coeffs) for p in values.values()}
        assert len(distinct) == 1, f"numeric routes disagree at n={n}: {values}"


def check_euler_characteristics(max_n: int):
    top = max(max_n, 5)
    chi = euler_chars(top)
    hnum = hnum_stirling(top).hnum
    for n in range(1, top + 1):
        assert chi[n] == hnum[n].eval(1), f"chi_{n} != H_{n}(1)"
    assert [chi[n] for n in range(2, 6)] == [1, 2, 10, 84], "spot values of chi deviate"


def check_structural(max_n: int):
    hnum = hnum_stirling(max_n).hnum
    for n in range(2, max_n + 1):
        p = hnum[n]
        assert p.degree == n - 2, f"H_{n} has degree {p.degree}"
        assert p.is_monic(), f"H_{n} is not monic"
        assert p.is_palindromic(), f"H_{n} is not palindromic"
        assert p.is_unimodal(), f"H_{n} is not unimodal"
    B = solve_B(m_series(min(max_n, 8)))
    for n in range(2, min(max_n, 8) + 1):
        table = schur_expand(B.component(n), n)
        for lam, poly in table.items():
            assert poly.has_integer_coeffs() and all(c >= 0 for c in poly.coeffs), (
                f"Schur coefficient of {lam} at n={n} is not a nonnegative integer polynomial"
            )
        chars = character_table(n)
        for mu in partitions_of(n):
            value = TPoly()
            for lam, poly in table.items():
                value = value + poly * chars.chi(lam, mu)
            assert value.has_integer_coeffs() and all(c >= 0 for c in value.coeffs), (
                f"character value at mu={mu}, n={n} is not nonnegative integral"
            )


def check_level_filtration(max_n: int):
    M = m_series(max_n)
    layers = level_filtration(M)
    assert layers[0].components == M.components, "first filtration layer differs from input"
    total = layers[0]
    for layer in layers[1:]:
        total = total + layer
    assert total == solve_B(M), "filtration layers do not sum to the solution"
    for idx, layer in enumerate(layers):
        k = idx + 1
        for n in range(2, max_n + 1):
            if k > n - 1:
                assert not layer.component(n), f"layer {k} has a degree-{n} part"


def check_tree_census(max_n: int):
    for n in range(2, min(max_n, 6) + 1):
        census = level_tree_census(n)
        chains = chain_counts_by_length(n)
        got = {length - 1: c for length, c in census.items()}
        assert got == chains, f"census at n={n} deviates from chain counts: {census}"


def check_strata_oracle(max_n: int):
    top = min(max_n, 6)
    hnum = hnum_stirling(top).hnum
    for n in range(2, top + 1):
        assert epoly_Bn(n) == hnum[n], f"stratum sum at n={n} deviates"


def check_pruning_roundtrip(max_n: int):
    for n in range(3, min(max_n, 5) + 1):
        for tree in enumerate_level_trees(n):
            if tree.length == 1:
                continue
            pruned, assignment = tree.prune()
            assert unprune(pruned, assignment) == tree, "pruning round-trip failed"


def check_serialization_roundtrip(max_n: int):
    B = solve_B(m_series(min(max_n, 6)))
    for n, comp in B.components.items():
        assert series_from_obj(series_to_obj(n, comp), comp.n_max) == comp
        table = schur_expand(comp, n)
        assert schur_table_from_obj(schur_table_to_obj(n, table)) == table


CHECKS: list[tuple[str, Callable[[int], None]]] = [
    ("stirling-bell identity", check_stirling_bell_identity),
    ("stirling triangle inversion", check_stirling_inversion),
    ("bell t->1 limit", check_bell_limit),
    ("omega closed form", check_omega_closed_form),
    ("plethysm spot identities", check_plethysm_spots),
    ("twisted counts are counts", check_twisted_counts),
    ("input series rank polynomials", check_input_rank_polys),
    ("input series integrality", check_input_integrality),
    ("functional equation", check_functional_equation),
    ("reference table reproduction", check_reference_table),
    ("numeric route agreement", check_numeric_routes),
    ("euler characteristics", check_euler_characteristics),
    ("structural properties", check_structural),
    ("level filtration", check_level_filtration),
    ("level tree census", check_tree_census),
    ("strata oracle", check_strata_oracle),
    ("pruning round-trip", check_pruning_roundtrip),
    ("serialization round-trip", check_serialization_roundtrip),
]


def run_all(max_n: int, report=print) -> list[tuple[str, str | None]]:
    """Run every check; returns (name, failure message or None) pairs."""
    results = []
    for name, fn in CHECKS:
        try:
            fn(max_n)
        except AssertionError as exc:
            results.append((name, str(exc) or "assertion failed"))
            report(f"FAIL {name}: {exc}")
        else:
            results.append((name, None))
            report(f"  ok {name}")
    return results
