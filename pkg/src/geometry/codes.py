"""
src/geometry/codes.py

Integer coordinates for trees.

A tree with n+2 leaves is the parenthesized word on x0 … x(n+1): a leaf at
position i is the letter x_i and a node is "(" + left + right + ")".
Two coordinate maps are read off that word:

TAMARI CODE  M(t) = (α_0, …, α_n), α_i = number of opening parentheses
             immediately in front of x_i (the last letter is skipped).
             Σ α_i = n + 1 for every tree, so all points share a hyperplane.

LODAY        for each adjacent pair x_i x_(i+1), take the smallest subword
             containing both; a_i counts its opening parentheses left of x_i,
             b_i its closing parentheses right of x_(i+1); coordinate a_i·b_i.
             Equivalently: (leaves of left subtree)·(leaves of right subtree)
             of the i-th internal vertex in in-order.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple, Union

from ..errors import DegreeError
from ..trees import Tree

Token = Union[str, int]


@dataclass(frozen=True)
class LatticePoint:
    """An exact integer coordinate vector."""
    coords: Tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    @property
    def total(self) -> int:
        return sum(self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _require_node(t: Tree) -> None:
    if t.is_leaf:
        raise DegreeError("the trivial tree has no parenthesized word")


def word_tokens(t: Tree) -> List[Token]:
    """The parenthesized word as tokens: "(", ")" and leaf indices."""
    tokens: List[Token] = []
    next_leaf = 0
    stack: List[Union[str, Tree]] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            tokens.append(item)
        elif item.is_leaf:
            tokens.append(next_leaf)
            next_leaf += 1
        else:
            stack.extend((")", item.right, item.left, "("))
    return tokens


def to_word(t: Tree) -> str:
    """
    Fully parenthesized word of a tree.

    Example:
        to_word(parse("((. .) .)"))  ->  "((x0x1)x2)"
    """
    _require_node(t)
    return "".join(f"x{tok}" if isinstance(tok, int) else tok for tok in word_tokens(t))


def tamari_code(t: Tree) -> LatticePoint:
    """M(t): opening-parenthesis counts in front of x_0 … x_n."""
    _require_node(t)
    alphas = []
    run = 0
    for tok in word_tokens(t):
        if tok == "(":
            run += 1
        elif tok == ")":
            run = 0
        else:
            alphas.append(run)
            run = 0
    return LatticePoint(tuple(alphas[:-1]))


def loday_coords(t: Tree) -> LatticePoint:
    """Loday coordinates computed on the parenthesized word."""
    _require_node(t)
    tokens = word_tokens(t)
    letter_at = [i for i, tok in enumerate(tokens) if isinstance(tok, int)]

    brackets = []
    stack = []
    for i, tok in enumerate(tokens):
        if tok == "(":
            stack.append(i)
        elif tok == ")":
            brackets.append((stack.pop(), i))

    coords = []
    for i in range(len(letter_at) - 1):
        here, there = letter_at[i], letter_at[i + 1]
        start, end = max(
            (pair for pair in brackets if pair[0] < here and pair[1] > there),
            key=lambda pair: pair[0],
        )
        a = sum(1 for tok in tokens[start:here] if tok == "(")
        b = sum(1 for tok in tokens[there + 1:end + 1] if tok == ")")
        coords.append(a * b)
    return LatticePoint(tuple(coords))


def loday_coords_by_subtrees(t: Tree) -> LatticePoint:
    """Loday coordinates from subtree leaf counts, in in-order."""
    _require_node(t)
    coords: List[int] = []

    def walk(node: Tree) -> None:
        if node.is_leaf:
            return
        walk(node.left)
        coords.append(node.left.leaves * node.right.leaves)
        walk(node.right)

    walk(t)
    return LatticePoint(tuple(coords))


class CoordinateMap(Enum):
    """Which realization to use."""
    TAMARI = "tamari"
    LODAY = "loday"

    def of(self, t: Tree) -> LatticePoint:
        if self is CoordinateMap.TAMARI:
            return tamari_code(t)
        return loday_coords(t)
