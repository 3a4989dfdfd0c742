"""
src/arithmetic/operations.py

The split addition on trees.

For non-trivial trees s and t:

    s ⊣ t := s^l ∨ (s^r + t)
    s ⊢ t := (s + t^l) ∨ t^r
    s + t := s ⊣ t ∪ s ⊢ t

ZERO CONVENTIONS (the leaf `.` is the integer 0):
    s ⊣ 0 = {s},  s ⊢ 0 = ∅      for s ≠ 0
    0 ⊣ t = ∅,    0 ⊢ t = {t}    for every t, 0 included

so that s + 0 = 0 + s = {s} and 0 + 0 = {0}.

Every operation is defined on single trees (memoized, returning frozensets)
and lifted to TreeSets by taking the union over all pairs of members.
"""

from functools import lru_cache
from typing import Callable, FrozenSet, Union

from ..errors import EmptySetError
from ..trees import LEAF, Tree, TreeSet, graft

TreeLike = Union[Tree, TreeSet]


@lru_cache(maxsize=None)
def left_trees(s: Tree, t: Tree) -> FrozenSet[Tree]:
    """s ⊣ t for single trees."""
    if s.is_leaf:
        return frozenset()
    if t.is_leaf:
        return frozenset((s,))
    return frozenset(graft(s.left, r) for r in sum_trees(s.right, t))


@lru_cache(maxsize=None)
def right_trees(s: Tree, t: Tree) -> FrozenSet[Tree]:
    """s ⊢ t for single trees."""
    if s.is_leaf:
        return frozenset((t,))
    if t.is_leaf:
        return frozenset()
    return frozenset(graft(r, t.right) for r in sum_trees(s, t.left))


@lru_cache(maxsize=None)
def sum_trees(s: Tree, t: Tree) -> FrozenSet[Tree]:
    """s + t for single trees; the two halves never overlap."""
    left_part = left_trees(s, t)
    right_part = right_trees(s, t)
    assert not (left_part & right_part), f"⊣ and ⊢ overlap for {s} and {t}"
    return left_part | right_part


def as_treeset(value: TreeLike) -> TreeSet:
    """Accept a single tree wherever a TreeSet is expected."""
    if isinstance(value, Tree):
        return TreeSet.singleton(value)
    return value


def _lift(op: Callable[[Tree, Tree], FrozenSet[Tree]], s: TreeLike, t: TreeLike) -> TreeSet:
    s, t = as_treeset(s), as_treeset(t)
    found = set()
    for a in s:
        for b in t:
            found |= op(a, b)
    return TreeSet.of(found, degree=s.degree + t.degree)


def op_left(s: TreeLike, t: TreeLike) -> TreeSet:
    """
    The left operation s ⊣ t.

    Args:
        s: Tree or TreeSet
        t: Tree or TreeSet

    Returns:
        TreeSet of degree deg(s) + deg(t); empty if either input is empty
    """
    return _lift(left_trees, s, t)


def op_right(s: TreeLike, t: TreeLike) -> TreeSet:
    """The right operation s ⊢ t (mirror image of op_left)."""
    return _lift(right_trees, s, t)


def tree_sum(s: TreeLike, t: TreeLike) -> TreeSet:
    """s + t = (s ⊣ t) ∪ (s ⊢ t)."""
    return _lift(sum_trees, s, t)


def embed(n: int) -> TreeSet:
    """The integer n as the set of all trees with n internal vertices."""
    return TreeSet.full(n)


def project(s: TreeSet) -> int:
    """
    The integer a non-empty TreeSet is a piece of (its common degree).

    Raises:
        EmptySetError: s has no members
    """
    if s.is_empty:
        raise EmptySetError("cannot project an empty set of trees to an integer")
    return s.degree


ZERO = TreeSet.singleton(LEAF)
