"""
src/trees/treeset.py

Duplicate-free sets of trees of one degree.

A TreeSet is the value type of ⊣, ⊢, + and ×. Members are kept sorted in
the canonical tree order, so two TreeSets are equal exactly when they hold
the same trees, and printing one is deterministic.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, Optional, Tuple

from ..errors import DegreeError
from .parser import parse
from .tree import Tree, render, trees_of_degree


@dataclass(frozen=True)
class TreeSet:
    """
    A finite set of trees sharing one degree.

    Attributes:
        degree: Common degree of the members (kept even when empty)
        members: The trees, sorted and deduplicated
    """
    degree: int
    members: Tuple[Tree, ...] = ()
    _index: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeError(f"degree must be non-negative, got {self.degree}")
        for t in self.members:
            if t.degree != self.degree:
                raise DegreeError(
                    f"tree {render(t)} has degree {t.degree}, set has degree {self.degree}"
                )
        object.__setattr__(self, "_index", frozenset(self.members))

    @classmethod
    def of(cls, trees: Iterable[Tree], degree: Optional[int] = None) -> "TreeSet":
        """
        Canonicalize an iterable of trees into a TreeSet.

        Args:
            trees: Any iterable of trees (duplicates allowed)
            degree: Required when `trees` may be empty

        Raises:
            DegreeError: mixed degrees, or an empty input with no degree
        """
        unique = sorted(set(trees))
        if degree is None:
            if not unique:
                raise DegreeError("cannot infer the degree of an empty set")
            degree = unique[0].degree
        return cls(degree=degree, members=tuple(unique))

    @classmethod
    def singleton(cls, t: Tree) -> "TreeSet":
        return cls(degree=t.degree, members=(t,))

    @classmethod
    def full(cls, degree: int) -> "TreeSet":
        """All trees of the given degree (the integer `degree` as a set)."""
        return cls(degree=degree, members=trees_of_degree(degree))

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, t: object) -> bool:
        return t in self._index

    def __or__(self, other: "TreeSet") -> "TreeSet":
        return self.union(other)

    @property
    def is_empty(self) -> bool:
        return not self.members

    def union(self, other: "TreeSet") -> "TreeSet":
        if self.degree != other.degree:
            raise DegreeError(
                f"cannot unite sets of degree {self.degree} and {other.degree}"
            )
        return TreeSet.of(self.members + other.members, degree=self.degree)

    def intersection(self, other: "TreeSet") -> "TreeSet":
        if self.degree != other.degree:
            return TreeSet(degree=self.degree)
        keep = set(other.members)
        return TreeSet(self.degree, tuple(t for t in self.members if t in keep))

    def render_lines(self) -> str:
        """One canonical tree per line, newline-terminated (empty string if empty)."""
        return "".join(f"{render(t)}\n" for t in self.members)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {"degree": self.degree, "trees": [render(t) for t in self.members]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TreeSet":
        """Create a TreeSet from its JSON dictionary."""
        return cls.of((parse(s) for s in data.get("trees", [])), degree=data["degree"])

    def __str__(self) -> str:
        return "{" + ", ".join(render(t) for t in self.members) + "}"


def enumerate_trees(n_leaves: int) -> TreeSet:
    """
    PBT_{n_leaves}: every tree with the given number of leaves.

    Args:
        n_leaves: At least 1

    Returns:
        TreeSet of degree n_leaves - 1, of size catalan(n_leaves - 1)
    """
    if n_leaves < 1:
        raise DegreeError(f"a tree has at least one leaf, got n_leaves={n_leaves}")
    return TreeSet.full(n_leaves - 1)
