"""
src/trees/parser.py

Reader for the text form of trees.

Grammar (whitespace allowed between any two tokens):

    tree := "." | "(" tree tree ")"

render() in tree.py writes the canonical form `(l r)` with single spaces;
parse() accepts it back along with any other spacing.
"""

from typing import List, Tuple

from ..errors import TreeParseError, UnbalancedError
from .tree import LEAF, Tree, graft


def _skip_space(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_at(text: str, pos: int) -> Tuple[Tree, int]:
    """Read one tree starting at pos; an explicit stack holds the open nodes."""
    # each open node keeps the subtrees read so far (zero or one)
    open_nodes: List[List[Tree]] = []
    while True:
        pos = _skip_space(text, pos)
        if pos >= len(text):
            if open_nodes:
                raise UnbalancedError("unbalanced parentheses: missing ')'", len(text))
            raise TreeParseError("empty tree literal", pos)

        char = text[pos]
        if char == "(":
            open_nodes.append([])
            pos += 1
            continue
        if char == ")":
            if not open_nodes:
                raise UnbalancedError("unbalanced parentheses: unexpected ')'", pos)
            raise TreeParseError("a node needs two subtrees", pos)
        if char != ".":
            raise TreeParseError(f"unexpected character {char!r}", pos)
        tree, pos = LEAF, pos + 1

        while open_nodes:
            children = open_nodes[-1]
            children.append(tree)
            if len(children) == 1:
                break
            pos = _skip_space(text, pos)
            if pos >= len(text):
                raise UnbalancedError("unbalanced parentheses: missing ')'", pos)
            if text[pos] != ")":
                raise TreeParseError(f"expected ')' but found {text[pos]!r}", pos)
            open_nodes.pop()
            tree, pos = graft(children[0], children[1]), pos + 1
        else:
            return tree, pos


def parse(text: str) -> Tree:
    """
    Parse a tree literal.

    Args:
        text: e.g. "(. (. .))"

    Returns:
        The Tree

    Raises:
        UnbalancedError: parentheses do not balance
        TreeParseError: any other malformed input (position included)
    """
    tree, pos = _parse_at(text, 0)
    pos = _skip_space(text, pos)
    if pos < len(text):
        if text[pos] == ")":
            raise UnbalancedError("unbalanced parentheses: unexpected ')'", pos)
        raise TreeParseError(f"trailing input {text[pos:]!r}", pos)
    return tree
