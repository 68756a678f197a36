import pytest

from braidchow.leveltrees import (
    LevelTree,
    chain_count,
    chain_counts_by_length,
    enumerate_level_trees,
    epoly_Bn,
    level_tree_census,
    open_part_count,
    stratum_epoly,
    unprune,
    _make_node,
)
from braidchow.solver import hnum_stirling
from braidchow.tpoly import TPoly


def tree(*args):
    return LevelTree(_make_node(*args))


def test_single_tree_for_n2():
    trees = list(enumerate_level_trees(2))
    assert len(trees) == 1
    assert trees[0].length == 1
    assert trees[0].n == 2


def test_n3_trees():
    trees = list(enumerate_level_trees(3))
    assert len(trees) == 4
    by_length = {}
    for t in trees:
        by_length.setdefault(t.length, []).append(t)
    assert len(by_length[1]) == 1
    assert len(by_length[2]) == 3
    # two-level trees have shape root{0,a} -> child{b,c}
    for t in by_length[2]:
        root_level, root_marks, root_children = t.root
        assert len(root_marks) == 2 and 0 in root_marks
        assert len(root_children) == 1
        assert len(root_children[0][1]) == 2


def test_n4_census():
    assert level_tree_census(4) == {1: 1, 2: 13, 3: 18}


def test_no_duplicates():
    for n in (3, 4, 5):
        trees = list(enumerate_level_trees(n))
        assert len(set(trees)) == len(trees)


def test_all_markings_present():
    for n in (3, 4, 5):
        for t in enumerate_level_trees(n):
            marks = sorted(m for _l, ms, _c in t.vertices() for m in ms)
            assert marks == list(range(n + 1))


def test_max_levels_is_n_minus_1():
    for n in (3, 4, 5, 6):
        lengths = set(level_tree_census(n))
        assert max(lengths) == n - 1
        assert min(lengths) == 1


def test_validation_rejects_bad_trees():
    with pytest.raises(ValueError):  # unstable root (2 markings, no children)
        tree(0, (0, 1), ())
    with pytest.raises(ValueError):  # level jump not onto {0,1}
        tree(0, (0, 1), (_make_node(2, (2, 3), ()),))
    with pytest.raises(ValueError):  # non-root vertex at level 0
        tree(0, (0, 1), (_make_node(0, (2, 3), ()),))
    with pytest.raises(ValueError):  # marking 0 absent from the root
        tree(0, (1, 2), (_make_node(1, (0, 3), ()),))


def test_enumerate_rejects_small_n():
    with pytest.raises(ValueError):
        next(enumerate_level_trees(1))


# -- chain-count oracle ---------------------------------------------------------


def test_chain_counts_small():
    assert chain_count(2) == 1
    assert chain_count(3) == 4
    assert chain_count(4) == 32
    assert chain_counts_by_length(4) == {0: 1, 1: 13, 2: 18}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_census_equals_chain_counts(n):
    census = level_tree_census(n)
    chains = chain_counts_by_length(n)
    assert {length - 1: c for length, c in census.items()} == chains
    assert sum(census.values()) == chain_count(n)


# -- pruning ----------------------------------------------------------------------


def test_prune_drops_one_level():
    for t in enumerate_level_trees(4):
        if t.length == 1:
            with pytest.raises(ValueError):
                t.prune()
            continue
        pruned, assignment = t.prune()
        assert pruned.length == t.length - 1
        # assignment covers {1..n} by disjoint nonempty subsets, lex sorted
        flat = sorted(x for subset in assignment for x in subset)
        assert flat == list(range(1, t.n + 1))
        assert list(assignment) == sorted(assignment)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_prune_unprune_roundtrip(n):
    for t in enumerate_level_trees(n):
        if t.length == 1:
            continue
        pruned, assignment = t.prune()
        assert unprune(pruned, assignment) == t


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pruned_trees_are_generated(n):
    # the pruning of any generated tree appears in the enumeration of its size
    pools = {}
    for t in enumerate_level_trees(n):
        if t.length == 1:
            continue
        pruned, _assignment = t.prune()
        m = pruned.n
        if m not in pools:
            pools[m] = set(enumerate_level_trees(m))
        assert pruned in pools[m]


# -- stratum polynomials ------------------------------------------------------------


def test_open_part_count():
    q = TPoly((0, 1))
    assert open_part_count(3) == TPoly.const(1)
    assert open_part_count(4) == q - 2
    assert open_part_count(5) == (q - 2) * (q - 3)


def test_stratum_epoly_one_level():
    t = tree(0, (0, 1, 2, 3, 4), ())
    assert stratum_epoly(t) == (TPoly((0, 1)) - 2) * (TPoly((0, 1)) - 3)


def test_stratum_epoly_chain():
    t = tree(0, (0, 1, 2), (_make_node(1, (3, 4), ()),))
    assert stratum_epoly(t) == TPoly((-2, 1))


def test_stratum_epoly_two_children_same_level():
    t = tree(0, (0,), (_make_node(1, (1, 2), ()), _make_node(1, (3, 4), ())))
    assert stratum_epoly(t) == TPoly((-1, 1))


def test_epoly_small():
    assert epoly_Bn(3) == TPoly((1, 1))
    assert epoly_Bn(4) == TPoly((1, 8, 1))
    assert epoly_Bn(5) == TPoly((1, 41, 41, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_epoly_matches_recursions(n):
    assert epoly_Bn(n) == hnum_stirling(n).hnum[n]


def test_epoly_monic_palindromic():
    for n in (3, 4, 5, 6):
        p = epoly_Bn(n)
        assert p.degree == n - 2
        assert p.is_monic()
        assert p.is_palindromic()
