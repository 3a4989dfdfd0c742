"""
src/geometry/canopy.py

Canopy ψ and its section σ.

The canopy of a tree with n+2 leaves records, for the n interior leaves
(all but the leftmost and rightmost) from left to right, whether the leaf
is a left child (−) or a right child (+).

σ picks one tree per canopy: the maximum of the fiber ψ⁻¹(c) in the Tamari
order. A fiber is an interval of the order, so its maximum is reached from
any member by climbing covers that stay inside the fiber.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from ..errors import DegreeError, TreeParseError
from ..trees import Tree, iter_leaves, trees_of_degree
from ..tamari import rotations

SIGNS = ("-", "+")


@dataclass(frozen=True)
class Canopy:
    """A sign sequence over {−, +}."""
    signs: Tuple[str, ...] = ()

    def __post_init__(self):
        for sign in self.signs:
            if sign not in SIGNS:
                raise TreeParseError(f"canopy signs are '-' or '+', got {sign!r}")

    @classmethod
    def from_string(cls, text: str) -> "Canopy":
        """Read a sign string such as "-+-" (empty string allowed)."""
        for i, char in enumerate(text):
            if char not in SIGNS:
                raise TreeParseError(f"canopy signs are '-' or '+', got {char!r}", i)
        return cls(tuple(text))

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join(self.signs)


def all_canopies(n: int) -> List[Canopy]:
    """{−, +}^n in lexicographic order ('-' first)."""
    return [Canopy(signs) for signs in product(SIGNS, repeat=n)]


def canopy(t: Tree) -> Canopy:
    """ψ(t): orientation of the interior leaves."""
    if t.is_leaf:
        raise DegreeError("the trivial tree has no canopy")
    sides = [side for _, side in iter_leaves(t)]
    return Canopy(tuple("-" if side == "left" else "+" for side in sides[1:-1]))


@lru_cache(maxsize=None)
def _fibers(degree: int) -> Dict[Canopy, Tuple[Tree, ...]]:
    fibers: Dict[Canopy, List[Tree]] = {}
    for t in trees_of_degree(degree):
        fibers.setdefault(canopy(t), []).append(t)
    return {c: tuple(members) for c, members in fibers.items()}


def fiber(c: Canopy) -> Tuple[Tree, ...]:
    """ψ⁻¹(c) in canonical order."""
    return _fibers(len(c) + 1).get(c, ())


def section(c: Canopy) -> Tree:
    """σ(c): the Tamari-maximal tree with canopy c."""
    members = fiber(c)
    if not members:
        raise DegreeError(f"no tree has canopy {c}")
    inside = set(members)
    current = members[0]
    while True:
        step = next((u for u in sorted(rotations(current)) if u in inside), None)
        if step is None:
            return current
        current = step
