"""Hypothesis strategies for exact symmetric-function data."""

from fractions import Fraction

import hypothesis.strategies as st

from braidchow.symseries import SymSeries


def fractions(max_num=6, max_den=4):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def partitions(max_size=6):
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.lists(
            st.integers(min_value=1, max_value=n), min_size=1, max_size=n
        ).map(lambda parts: tuple(sorted(parts, reverse=True)))
    )


def series(n_max=6, max_terms=4, max_t=2, allow_constant=True, pure_sym=False):
    """Random truncated series; set pure_sym to keep every term in the
    ideal generated by the power sums (no pure-t terms)."""
    keys = st.tuples(partitions(n_max), st.integers(min_value=0, max_value=max_t))
    if allow_constant and not pure_sym:
        empty = st.tuples(st.just(()), st.integers(min_value=0, max_value=max_t))
        keys = st.one_of(keys, empty)
    return st.dictionaries(keys, fractions(), max_size=max_terms).map(
        lambda terms: SymSeries(
            n_max, {k: c for k, c in terms.items() if sum(k[0]) <= n_max}
        )
    )


def inner_series(n_max=6, max_terms=3, max_t=1):
    """Constant-term-free series, valid as the inner argument of a plethysm."""
    return series(n_max, max_terms, max_t, allow_constant=False, pure_sym=True)
