"""Plane-tree enumeration: the combinatorial ground truth for the counts.

Subdivisions of a roofed polygon biject with ordered rooted trees whose
internal nodes have 2 to 5 children; an internal node of arity k stands
for a face with k + 1 sides.  The census of a tree is therefore the tuple
(number of arity-2 nodes, ..., number of arity-5 nodes).

Trees are nested tuples: the leaf is the empty tuple, an internal node is
the tuple of its children.  Text rendering: a leaf prints as ``.``, an
internal node of arity k as ``(k child ... child)`` with single spaces,
e.g. ``(2 (2 . .) .)``.

Counting by dynamic programming is cheap; listing trees is not.  Both
entry points refuse up front when the exact count (known in closed form)
exceeds their budget, so a typo in a census cannot wedge the process.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import BudgetExceededError
from .hypercat import hyper_catalan
from .typevec import TypeVector

LEAF = ()
MIN_ARITY = 2
MAX_ARITY = 5
DEFAULT_COUNT_BUDGET = 10**7
DEFAULT_TREE_LIMIT = 10**4


@lru_cache(maxsize=None)
def _count_type(m: TypeVector) -> int:
    """Trees with census exactly m, by removing the root."""
    if m == (0, 0, 0, 0):
        return 1
    total = 0
    for k in range(MIN_ARITY, MAX_ARITY + 1):
        if m[k - 2] == 0:
            continue
        rest = list(m)
        rest[k - 2] -= 1
        total += _count_forest(k, TypeVector(*rest))
    return total


@lru_cache(maxsize=None)
def _count_forest(parts: int, m: TypeVector) -> int:
    """Ordered forests of ``parts`` trees whose censuses sum to m."""
    if parts == 1:
        return _count_type(m)
    total = 0
    for first in _subvectors(m):
        head = _count_type(first)
        if head:
            rest = TypeVector(*(a - b for a, b in zip(m, first)))
            total += head * _count_forest(parts - 1, rest)
    return total


def _subvectors(m):
    return itertools.product(*(range(c + 1) for c in m))


def enumerate_count(m, budget: int = DEFAULT_COUNT_BUDGET) -> int:
    """Count trees with census m by dynamic programming over subtrees.

    Independent of the closed form except for the guard: the closed form
    predicts the answer's size, and counts beyond ``budget`` are refused
    before any work happens.
    """
    m = TypeVector(*m)
    if min(m) < 0:
        raise ValueError(f"census components must be >= 0, got {tuple(m)}")
    scale = hyper_catalan(m)
    if scale > budget:
        raise BudgetExceededError(
            f"census {tuple(m)} has {scale} trees, over the budget of {budget}"
        )
    return _count_type(m)


def enumerate_trees(m, limit: int = DEFAULT_TREE_LIMIT) -> list:
    """All trees with census m, sorted, refused when more than ``limit``."""
    m = TypeVector(*m)
    if min(m) < 0:
        raise ValueError(f"census components must be >= 0, got {tuple(m)}")
    scale = hyper_catalan(m)
    if scale > limit:
        raise BudgetExceededError(
            f"census {tuple(m)} has {scale} trees, over the limit of {limit}"
        )
    return sorted(_gen_trees(m))


def _gen_trees(m: TypeVector):
    if m == (0, 0, 0, 0):
        yield LEAF
        return
    for k in range(MIN_ARITY, MAX_ARITY + 1):
        if m[k - 2] == 0:
            continue
        rest = list(m)
        rest[k - 2] -= 1
        for split in _splits(TypeVector(*rest), k):
            pools = [list(_gen_trees(part)) for part in split]
            if all(pools):
                yield from itertools.product(*pools)


def _splits(m: TypeVector, parts: int):
    """Ordered ``parts``-tuples of censuses summing to m."""
    per_component = [list(_compositions(c, parts)) for c in m]
    for combo in itertools.product(*per_component):
        yield tuple(
            TypeVector(combo[0][i], combo[1][i], combo[2][i], combo[3][i])
            for i in range(parts)
        )


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def tree_type(tree) -> TypeVector:
    """Census of a tree; validates every internal arity is 2..5."""
    counts = [0, 0, 0, 0]
    stack = [tree]
    while stack:
        node = stack.pop()
        if node == LEAF:
            continue
        arity = len(node)
        if not MIN_ARITY <= arity <= MAX_ARITY:
            raise ValueError(f"internal node of arity {arity}; must be 2..5")
        counts[arity - 2] += 1
        stack.extend(node)
    return TypeVector(*counts)


def render_tree(tree) -> str:
    """Canonical text form: leaf is '.', node of arity k is '(k c1 ... ck)'."""
    if tree == LEAF:
        return "."
    parts = " ".join(render_tree(child) for child in tree)
    return f"({len(tree)} {parts})"
