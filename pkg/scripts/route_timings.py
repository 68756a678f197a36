#!/usr/bin/env python3
"""Time every independent route to the rank polynomials and confirm agreement.

Usage: python scripts/route_timings.py [max_n] [strata_max_n]
"""

import sys
import time

from braidchow.leveltrees import epoly_Bn
from braidchow.pointcounts import m_series
from braidchow.solver import hnum_bell, hnum_from_solver, hnum_lattice, hnum_stirling, solve_B


def timed(label, fn):
    t0 = time.perf_counter()
    result = fn()
    print(f"  {label:<26} {time.perf_counter() - t0:8.2f}s")
    return result


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    strata_n = int(sys.argv[2]) if len(sys.argv) > 2 else min(max_n, 7)
    print(f"routes through n = {max_n} (strata through n = {strata_n}):")
    solver = timed("plethystic solver + rk", lambda: hnum_from_solver(solve_B(m_series(max_n))))
    stirling = timed("stirling recursion", lambda: hnum_stirling(max_n))
    bell = timed("bell recursion", lambda: hnum_bell(max_n))
    lattice = timed("set-partition lattice", lambda: hnum_lattice(min(max_n, 10)))
    strata = timed(
        f"level-tree strata (n<={strata_n})",
        lambda: {n: epoly_Bn(n) for n in range(2, strata_n + 1)},
    )

    agree = True
    for n in range(2, max_n + 1):
        values = [solver.hnum[n], stirling.hnum[n], bell.hnum[n]]
        if n in lattice.hnum:
            values.append(lattice.hnum[n])
        if n in strata:
            values.append(strata[n])
        if len({tuple(p.coeffs) for p in values}) != 1:
            agree = False
            print(f"  MISMATCH at n={n}")
    print("all routes agree" if agree else "ROUTE DISAGREEMENT", "...")
    for n in range(2, max_n + 1):
        print(f"  H_{n} = {stirling.hnum[n]}")


if __name__ == "__main__":
    main()
