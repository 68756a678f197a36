"""Golden data: the published equivariant Chow polynomials for n <= 6.

Schur coefficients, one tuple of t-coefficients (constant term first) per
partition; partitions with zero coefficient are omitted.  Everything the
solver computes for n <= 6 is required to match this table exactly.
"""

REFERENCE_TABLE: dict[int, dict[tuple[int, ...], tuple[int, ...]]] = {
    2: {(2,): (1,)},
    3: {(3,): (1, 1)},
    4: {
        (4,): (1, 3, 1),
        (3, 1): (0, 1),
        (2, 2): (0, 1),
    },
    5: {
        (5,): (1, 5, 5, 1),
        (4, 1): (0, 4, 4),
        (3, 2): (0, 3, 3),
        (2, 2, 1): (0, 1, 1),
    },
    6: {
        (6,): (1, 9, 19, 9, 1),
        (5, 1): (0, 7, 21, 7),
        (4, 2): (0, 9, 28, 9),
        (4, 1, 1): (0, 1, 7, 1),
        (3, 3): (0, 2, 8, 2),
        (3, 2, 1): (0, 2, 12, 2),
        (3, 1, 1, 1): (0, 0, 1),
        (2, 2, 2): (0, 2, 7, 2),
        (2, 2, 1, 1): (0, 0, 1),
    },
}
