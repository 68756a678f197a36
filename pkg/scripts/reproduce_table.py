#!/usr/bin/env python3
"""Compute the equivariant Chow table and print it with a numeric cross-check.

Usage: python scripts/reproduce_table.py [max_n]
"""

import sys
import time

from braidchow.characters import schur_expand
from braidchow.pointcounts import m_series
from braidchow.serialize import schur_table_latex_row
from braidchow.solver import (
    euler_chars,
    hnum_bell,
    hnum_from_solver,
    hnum_stirling,
    solve_B,
    verify_functional_equation,
)


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    t0 = time.perf_counter()
    M = m_series(max_n)
    B = solve_B(M)
    print(f"solved through degree {max_n} in {time.perf_counter() - t0:.2f}s\n")

    for n in range(2, max_n + 1):
        print(schur_table_latex_row(n, schur_expand(B.component(n), n)))

    print("\nnumeric cross-check (solver vs two recursions):")
    solver = hnum_from_solver(B).hnum
    stirling = hnum_stirling(max_n).hnum
    bell = hnum_bell(max_n).hnum
    chi = euler_chars(max_n)
    for n in range(2, max_n + 1):
        status = "ok" if solver[n] == stirling[n] == bell[n] else "MISMATCH"
        print(f"  n={n:<2} H = {solver[n]}   chi = {chi[n]}   [{status}]")

    print("\nfunctional equation residual:", "zero" if verify_functional_equation(B, M) else "NONZERO")


if __name__ == "__main__":
    main()
