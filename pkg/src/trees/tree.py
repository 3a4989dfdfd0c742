"""
src/trees/tree.py

Planar binary rooted trees.

A tree is either the leaf `.` (degree 0, the integer 0) or a node grafting
an ordered pair of subtrees. Trees are immutable values with structural
equality and a canonical total order:

    leaf < any node,  nodes compared lexicographically on (left, right)

Canonical text form:

    .            the leaf
    (l r)        the node with left subtree l and right subtree r

so `(. .)` is the tree representing 1, `((. .) .)` is 1 ⊢ 1 and
`(. (. .))` is 1 ⊣ 1.
"""

from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from typing import Iterator, List, Optional, Tuple, Union

from scipy.special import comb

from ..errors import DegreeError


@total_ordering
@dataclass(frozen=True, eq=False, repr=False)
class Tree:
    """
    An immutable planar binary rooted tree.

    Attributes:
        left: Left subtree, None for the leaf
        right: Right subtree, None for the leaf
        degree: Number of internal vertices
        key: Nested-tuple sort key; () for the leaf, (left.key, right.key) otherwise

    Build nodes with graft() rather than calling Tree(l, r) directly; the
    leaf is the module constant LEAF.
    """
    left: Optional["Tree"] = None
    right: Optional["Tree"] = None
    degree: int = field(init=False)
    key: tuple = field(init=False)
    _hash: int = field(init=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise DegreeError("a node needs both a left and a right subtree")
        if self.left is None:
            degree, key, h = 0, (), hash(())
        else:
            degree = self.left.degree + self.right.degree + 1
            key = (self.left.key, self.right.key)
            h = hash((self.left._hash, self.right._hash))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", h)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaves(self) -> int:
        return self.degree + 1

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.degree == other.degree
            and self.key == other.key
        )

    def __lt__(self, other: "Tree") -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.key < other.key

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Tree('{render(self)}')"


LEAF = Tree()


def graft(left: Tree, right: Tree) -> Tree:
    """Join the roots of two trees under a new root: left ∨ right."""
    return Tree(left, right)


def render(t: Tree) -> str:
    """Canonical single-space text form of a tree."""
    parts: List[str] = []
    stack: List[Union[str, Tree]] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item.is_leaf:
            parts.append(".")
        else:
            stack.extend((")", item.right, " ", item.left, "("))
    return "".join(parts)


def compare(a: Tree, b: Tree) -> int:
    """
    Canonical total order.

    Returns:
        -1 if a < b, 0 if a == b, 1 if a > b
    """
    if a == b:
        return 0
    return -1 if a.key < b.key else 1


@lru_cache(maxsize=None)
def _trees_of_degree(degree: int) -> Tuple[Tree, ...]:
    if degree == 0:
        return (LEAF,)
    found: List[Tree] = []
    for k in range(degree):
        for left in _trees_of_degree(k):
            for right in _trees_of_degree(degree - 1 - k):
                found.append(graft(left, right))
    return tuple(sorted(found))


def trees_of_degree(degree: int) -> Tuple[Tree, ...]:
    """
    All trees with `degree` internal vertices, in canonical order.

    Built by the split recursion PBT_n = ⋃_k PBT_k ∨ PBT_{n-k} and memoized.
    """
    if degree < 0:
        raise DegreeError(f"degree must be non-negative, got {degree}")
    return _trees_of_degree(degree)


def catalan(n: int) -> int:
    """c_n = (2n)! / (n! (n+1)!), computed exactly."""
    return int(comb(2 * n, n, exact=True)) // (n + 1)


def left_comb(n: int) -> Tree:
    """((… (. .) …) .) with n internal vertices; the Tamari minimum."""
    if n < 0:
        raise DegreeError(f"degree must be non-negative, got {n}")
    t = LEAF
    for _ in range(n):
        t = graft(t, LEAF)
    return t


def right_comb(n: int) -> Tree:
    """(. (… (. .) …)) with n internal vertices; the Tamari maximum."""
    if n < 0:
        raise DegreeError(f"degree must be non-negative, got {n}")
    t = LEAF
    for _ in range(n):
        t = graft(LEAF, t)
    return t


def iter_leaves(t: Tree) -> Iterator[Tuple[Tree, Optional[str]]]:
    """
    Yield (parent, side) for every leaf from left to right.

    side is "left" or "right" (which child of parent the leaf is); the lone
    leaf of the trivial tree yields (None, None).
    """
    if t.is_leaf:
        yield None, None
        return
    stack = [(t, "right", t.right), (t, "left", t.left)]
    while stack:
        parent, side, node = stack.pop()
        if node.is_leaf:
            yield parent, side
        else:
            stack.append((node, "right", node.right))
            stack.append((node, "left", node.left))
