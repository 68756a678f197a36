"""Rooted marked stable trees with levels, and the stratum-sum oracle.

A level tree on markings {0, ..., n} is a rooted tree (the root carries
marking 0) with a level for every vertex: levels are onto {0, ..., k}, they
strictly increase away from the root, and every vertex v satisfies the
stability bound val(v) + #markings(v) >= 3.

Enumeration inverts pruning.  Pruning deletes all vertices of the top level
and turns each into a marking on its parent; conversely a tree with one more
level arises from a tree on a smaller marking set by blowing up chosen
markings into new top-level vertices carrying blocks of at least two labels.
Every isomorphism class is produced exactly once because fully-labeled
stable trees are rigid.  The census cross-check counts chains in the proper
part of the set-partition lattice, a separate computation with no trees in
it.

Each tree contributes a product over levels to the point count of the whole
space: a vertex of degree m contributes the open-stratum count
(q-2)(q-3)...(q-m+2) times (q-1), and each level divides once by (q-1) for
the simultaneous rescaling.  Summing over all trees gives a brute-force
oracle for the rank polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinat import set_partitions
from .tpoly import TPoly

QPoly = TPoly

# A vertex is (level, markings, children); markings is a sorted tuple of
# labels, children a tuple of vertices sorted by _node_key.
Node = tuple


class _Token:
    """Placeholder marking for a block of labels; compares by identity."""

    __slots__ = ("labels",)

    def __init__(self, labels: tuple):
        self.labels = labels


def _label_key(x):
    if isinstance(x, int):
        return (0, (x,))
    if isinstance(x, _Token):
        return (1, tuple(_label_key(y) for y in x.labels))
    raise TypeError(f"unexpected marking {x!r}")


def _node_key(node: Node):
    level, marks, children = node
    return (level, tuple(_label_key(m) for m in marks), tuple(_node_key(c) for c in children))


def _make_node(level, marks, children) -> Node:
    return (
        level,
        tuple(sorted(marks, key=_label_key)),
        tuple(sorted(children, key=_node_key)),
    )


def _partitions_min2(labels: tuple):
    """Set partitions of ``labels`` into blocks of size >= 2 (at least one block)."""
    if len(labels) < 2:
        return
    first, rest = labels[0], labels[1:]
    for extra in range(1, len(rest) + 1):
        for chosen in combinations(range(len(rest)), extra):
            chosen_set = set(chosen)
            block = (first, *(rest[i] for i in chosen))
            left = tuple(rest[i] for i in range(len(rest)) if i not in chosen_set)
            if len(left) == 1:
                continue
            if left:
                for others in _partitions_min2(left):
                    yield (block, *others)
            else:
                yield (block,)


def _replace_tokens(node: Node, tokens: set, new_level: int) -> Node:
    level, marks, children = node
    kept = []
    new_children = [_replace_tokens(c, tokens, new_level) for c in children]
    for m in marks:
        if isinstance(m, _Token) and id(m) in tokens:
            new_children.append(_make_node(new_level, m.labels, ()))
        else:
            kept.append(m)
    return _make_node(level, kept, new_children)


def _enumerate(labels: tuple):
    """Yield (node, top_level) for every level tree on the given non-root labels."""
    n = len(labels)
    if n >= 2:
        yield _make_node(0, (0, *labels), ()), 0
    # shed a subset into blocks of size >= 2; the rest stay plain markings
    for shed_size in range(2, n + 1):
        for shed_idx in combinations(range(n), shed_size):
            shed_set = set(shed_idx)
            shed = tuple(labels[i] for i in shed_idx)
            kept = tuple(labels[i] for i in range(n) if i not in shed_set)
            for blocks in _partitions_min2(shed):
                tokens = tuple(_Token(tuple(sorted(b, key=_label_key))) for b in blocks)
                ids = {id(tok) for tok in tokens}
                for sub, top in _enumerate(kept + tokens):
                    yield _replace_tokens(sub, ids, top + 1), top + 1


@dataclass(frozen=True)
class LevelTree:
    """Canonical immutable level tree; validated on construction."""

    root: Node

    def __post_init__(self):
        self.validate()

    # -- structure ----------------------------------------------------------

    def vertices(self):
        """Iterate (level, markings, number_of_children) over all vertices."""
        stack = [self.root]
        while stack:
            level, marks, children = stack.pop()
            yield level, marks, len(children)
            stack.extend(children)

    @property
    def n(self) -> int:
        return sum(len(marks) for _l, marks, _c in self.vertices()) - 1

    @property
    def length(self) -> int:
        """Number of levels."""
        return 1 + max(level for level, _m, _c in self.vertices())

    def degrees(self) -> list[int]:
        """val(v) + #markings(v) for every vertex."""
        out = []
        stack = [(self.root, 0)]
        while stack:
            (level, marks, children), parent_edges = stack.pop()
            out.append(parent_edges + len(children) + len(marks))
            stack.extend((c, 1) for c in children)
        return out

    def level_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for level, _m, _c in self.vertices():
            sizes[level] = sizes.get(level, 0) + 1
        return sizes

    def validate(self):
        levels = self.level_sizes()
        top = max(levels)
        if sorted(levels) != list(range(top + 1)):
            raise ValueError("level map is not onto an initial segment")
        if levels[0] != 1:
            raise ValueError("root must be the unique level-0 vertex")
        if self.root[0] != 0:
            raise ValueError("root must sit at level 0")
        if 0 not in self.root[1]:
            raise ValueError("marking 0 must sit at the root")
        for deg in self.degrees():
            if deg < 3:
                raise ValueError("unstable vertex (degree < 3)")
        stack = [self.root]
        while stack:
            level, _marks, children = stack.pop()
            for child in children:
                if child[0] <= level:
                    raise ValueError("levels must strictly increase away from the root")
                stack.append(child)

    # -- pruning -------------------------------------------------------------

    def prune(self) -> tuple["LevelTree", tuple[tuple[int, ...], ...]]:
        """Delete the top level, turning each deleted vertex into a marking.

        Returns the pruned tree on relabeled markings {0, ..., m} together
        with the label assignment: entry j - 1 is the tuple of original
        markings that new marking j stands for (length 1 = a kept marking,
        length >= 2 = a deleted vertex's block).  The new labels follow the
        lexicographic order of those tuples.
        """
        top = self.length - 1
        if top == 0:
            raise ValueError("cannot prune a single-level tree")
        subsets: list[tuple[int, ...]] = []

        def collect(node: Node):
            _level, marks, children = node
            for m in marks:
                if m != 0:
                    subsets.append((m,))
            for child in children:
                if child[0] == top:
                    subsets.append(tuple(sorted(child[1])))
                else:
                    collect(child)

        collect(self.root)
        order = sorted(subsets)
        relabel = {subset: i + 1 for i, subset in enumerate(order)}

        def rebuild(node: Node) -> Node:
            level, marks, children = node
            new_marks = [0] if 0 in marks else []
            new_marks += [relabel[(m,)] for m in marks if m != 0]
            new_children = []
            for child in children:
                if child[0] == top:
                    new_marks.append(relabel[tuple(sorted(child[1]))])
                else:
                    new_children.append(rebuild(child))
            return _make_node(level, new_marks, new_children)

        return LevelTree(rebuild(self.root)), tuple(order)


def unprune(tree: LevelTree, assignment: tuple[tuple[int, ...], ...]) -> LevelTree:
    """Inverse of prune: marking j becomes assignment[j-1], as a plain marking
    when that tuple has length 1 and as a new top-level vertex otherwise."""
    new_level = tree.length

    def rebuild(node: Node) -> Node:
        level, marks, children = node
        kept = []
        new_children = [rebuild(c) for c in children]
        for m in marks:
            if m == 0:
                kept.append(0)
                continue
            subset = assignment[m - 1]
            if len(subset) == 1:
                kept.append(subset[0])
            else:
                new_children.append(_make_node(new_level, subset, ()))
        return _make_node(level, kept, new_children)

    return LevelTree(rebuild(tree.root))


def enumerate_level_trees(n: int):
    """Every level tree on markings {0, ..., n}, streamed, each class once."""
    if n < 2:
        raise ValueError("level trees need at least two non-root markings")
    for node, _top in _enumerate(tuple(range(1, n + 1))):
        yield LevelTree(node)


# -- stratum point counts -----------------------------------------------------


@lru_cache(maxsize=None)
def open_part_count(deg: int) -> QPoly:
    """Count for distinct points on a line minus two: (q-2)(q-3)...(q-deg+2)."""
    poly = QPoly.const(1)
    for i in range(2, deg - 1):
        poly = poly * QPoly((-i, 1))
    return poly


def stratum_epoly(tree: LevelTree) -> QPoly:
    """Per-tree point count: product over levels of (q-1)^(vertices-1) times
    the open-part counts of the vertex degrees."""
    poly = QPoly.const(1)
    for deg in tree.degrees():
        poly = poly * open_part_count(deg)
    excess = sum(size - 1 for size in tree.level_sizes().values())
    return poly * QPoly((-1, 1)) ** excess


def epoly_Bn(n: int) -> QPoly:
    """Sum of stratum counts over every level tree: the brute-force oracle
    for the degree-n rank polynomial.  Trees are grouped by their degree
    multiset before the polynomial work; grouping changes nothing but time."""
    signatures: Counter = Counter()
    for tree in enumerate_level_trees(n):
        key = (tuple(sorted(tree.degrees())), sum(s - 1 for s in tree.level_sizes().values()))
        signatures[key] += 1
    total = QPoly()
    for (degs, excess), count in signatures.items():
        poly = QPoly.const(count) * QPoly((-1, 1)) ** excess
        for deg in degs:
            poly = poly * open_part_count(deg)
        total = total + poly
    return total


def level_tree_census(n: int) -> dict[int, int]:
    """Number of level trees by number of levels."""
    counts: dict[int, int] = {}
    for tree in enumerate_level_trees(n):
        counts[tree.length] = counts.get(tree.length, 0) + 1
    return counts


# -- partition-lattice chain counts (independent census oracle) ---------------


def _proper_partition_lattice(n: int) -> list[tuple[frozenset, ...]]:
    out = []
    for blocks in set_partitions(range(1, n + 1)):
        if 1 < len(blocks) < n:
            out.append(tuple(frozenset(b) for b in blocks))
    return out


def _refines(fine, coarse_map) -> bool:
    # fine refines coarse iff each fine block lands inside one coarse block
    for block in fine:
        it = iter(block)
        target = coarse_map[next(it)]
        if any(coarse_map[x] is not target for x in it):
            return False
    return True


def chain_counts_by_length(n: int) -> dict[int, int]:
    """Chains in the proper part of the partition lattice, by chain size
    (size 0 = the empty chain), counted by powers of the strict zeta matrix."""
    elements = _proper_partition_lattice(n)
    block_maps = []
    for blocks in elements:
        bm = {}
        for block in blocks:
            for x in block:
                bm[x] = block
        block_maps.append(bm)
    # strict order: i < j iff i has more blocks and refines j
    below: list[list[int]] = [[] for _ in elements]
    for j, coarse in enumerate(elements):
        for i, fine in enumerate(elements):
            if len(fine) > len(coarse) and _refines(fine, block_maps[j]):
                below[j].append(i)
    counts = {0: 1}
    vec = [1] * len(elements)
    length = 1
    while any(vec):
        counts[length] = sum(vec)
        vec = [sum(vec[i] for i in below[j]) for j in range(len(elements))]
        length += 1
    return counts


def chain_count(n: int) -> int:
    """Total number of chains (empty chain included) in the proper part of
    the partition lattice; equals the number of level trees."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return sum(chain_counts_by_length(n).values())
