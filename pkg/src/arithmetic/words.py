"""
src/arithmetic/words.py

Dendriform words: parenthesized expressions in copies of 1 and the two
operations ⊣ (written `<|`) and ⊢ (written `|>`).

    1 |> 1               is the tree ((. .) .)
    1 <| 1               is the tree (. (. .))
    (1 |> 1) <| 1        is the tree ((. .) (. .))

Every tree has a canonical word, obtained from t = t^l ∨ t^r by

    t = (t^l ⊢ 1) ⊣ t^r

dropping whichever side is the leaf. Evaluating a word with 1 replaced by
another TreeSet is how trees are multiplied (see products.py).
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..errors import DegreeError, TreeParseError, UnbalancedError
from ..trees import Tree, TreeSet, graft, LEAF
from .operations import op_left, op_right


class Connective(Enum):
    """The two halves of +."""
    LEFT = "<|"
    RIGHT = "|>"


@dataclass(frozen=True)
class DendriformWord:
    """
    A formal expression over One, Left and Right.

    Attributes:
        connective: None for the generator One, otherwise the root operation
        left: Left operand (None for One)
        right: Right operand (None for One)
    """
    connective: Optional[Connective] = None
    left: Optional["DendriformWord"] = None
    right: Optional["DendriformWord"] = None

    @property
    def is_one(self) -> bool:
        return self.connective is None

    @property
    def ones(self) -> int:
        """Number of occurrences of One (the degree of the evaluation)."""
        if self.is_one:
            return 1
        return self.left.ones + self.right.ones

    def __str__(self) -> str:
        return render_word(self)


ONE = DendriformWord()


def w_left(a: DendriformWord, b: DendriformWord) -> DendriformWord:
    return DendriformWord(Connective.LEFT, a, b)


def w_right(a: DendriformWord, b: DendriformWord) -> DendriformWord:
    return DendriformWord(Connective.RIGHT, a, b)


def render_word(w: DendriformWord, top: bool = True) -> str:
    """Text form, e.g. `(1 |> 1) <| 1`; the outermost parentheses are omitted."""
    if w.is_one:
        return "1"
    body = f"{render_word(w.left, False)} {w.connective.value} {render_word(w.right, False)}"
    return body if top else f"({body})"


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        char = text[pos]
        if char.isspace():
            pos += 1
        elif char in "1()":
            tokens.append((char, pos))
            pos += 1
        elif text.startswith("<|", pos) or text.startswith("|>", pos):
            tokens.append((text[pos:pos + 2], pos))
            pos += 2
        else:
            raise TreeParseError(f"unexpected character {char!r} in word", pos)
    return tokens


def parse_word(text: str) -> DendriformWord:
    """
    Read a word written by render_word.

    Grammar: expr := atom [op atom];  atom := "1" | "(" expr ")"
    """
    tokens = _tokenize(text)
    end = len(text)

    def atom(i: int) -> Tuple[DendriformWord, int]:
        if i >= len(tokens):
            raise TreeParseError("word ended early", end)
        token, pos = tokens[i]
        if token == "1":
            return ONE, i + 1
        if token == "(":
            inner, i = expr(i + 1)
            if i >= len(tokens):
                raise UnbalancedError("unbalanced parentheses: missing ')'", end)
            if tokens[i][0] != ")":
                raise TreeParseError(f"expected ')' but found {tokens[i][0]!r}", tokens[i][1])
            return inner, i + 1
        if token == ")":
            raise UnbalancedError("unbalanced parentheses: unexpected ')'", pos)
        raise TreeParseError(f"expected 1 or '(' but found {token!r}", pos)

    def expr(i: int) -> Tuple[DendriformWord, int]:
        first, i = atom(i)
        if i < len(tokens) and tokens[i][0] in ("<|", "|>"):
            connective = Connective(tokens[i][0])
            second, i = atom(i + 1)
            return DendriformWord(connective, first, second), i
        return first, i

    word, i = expr(0)
    if i < len(tokens):
        token, pos = tokens[i]
        if token == ")":
            raise UnbalancedError("unbalanced parentheses: unexpected ')'", pos)
        raise TreeParseError(f"trailing input {text[pos:]!r}", pos)
    return word


def decompose(t: Tree) -> DendriformWord:
    """
    Canonical word of a tree: (decompose(t^l) ⊢ 1) ⊣ decompose(t^r).

    Raises:
        DegreeError: t is the leaf (0 has no decomposition into copies of 1)
    """
    if t.is_leaf:
        raise DegreeError("the trivial tree cannot be written with copies of 1")
    word = ONE
    if not t.left.is_leaf:
        word = w_right(decompose(t.left), ONE)
    if not t.right.is_leaf:
        word = w_left(word, decompose(t.right))
    return word


_Y = TreeSet.singleton(graft(LEAF, LEAF))


def evaluate(w: DendriformWord, one: Optional[TreeSet] = None) -> TreeSet:
    """
    Interpret a word as a TreeSet.

    Args:
        w: The word
        one: What One stands for; defaults to {(. .)}

    Returns:
        TreeSet of degree w.ones * one.degree
    """
    one = _Y if one is None else one
    if w.is_one:
        return one
    left = evaluate(w.left, one)
    right = evaluate(w.right, one)
    if w.connective is Connective.LEFT:
        return op_left(left, right)
    return op_right(left, right)


@lru_cache(maxsize=None)
def all_words(k: int) -> Tuple[DendriformWord, ...]:
    """Every word with k copies of One: all bracketings times all labels."""
    if k < 1:
        raise DegreeError(f"a word has at least one copy of 1, got {k}")
    if k == 1:
        return (ONE,)
    words = []
    for i in range(1, k):
        for a in all_words(i):
            for b in all_words(k - i):
                words.append(w_left(a, b))
                words.append(w_right(a, b))
    return tuple(words)


def distinct_evaluations(k: int) -> Dict[TreeSet, List[DendriformWord]]:
    """
    Group the words with k copies of One by their value.

    For k = 3 the eight words give five singleton values (the trees of
    PBT_4) and the two unions 1⊢(1⊢1) and (1⊣1)⊣1.
    """
    groups: Dict[TreeSet, List[DendriformWord]] = defaultdict(list)
    for w in all_words(k):
        groups[evaluate(w)].append(w)
    return dict(sorted(groups.items(), key=lambda item: tuple(t.key for t in item[0])))


def decompositions(t: Tree) -> List[DendriformWord]:
    """Every word whose evaluation is exactly {t}."""
    target = TreeSet.singleton(t)
    return [w for w in all_words(t.degree) if evaluate(w) == target]
