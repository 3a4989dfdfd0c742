"""
src/tamari/poset.py

The Tamari order on trees of one degree.

The covering relation is the increasing rotation at any subtree

    (a ∨ b) ∨ c   →   a ∨ (b ∨ c)

so 1⊢1 = ((. .) .) is below 1⊣1 = (. (. .)), the left comb is the minimum
and the right comb the maximum. Order queries are answered by reachability
in the per-degree Hasse diagram, which is built once per degree and then
shared (construction is serialized by a lock).
"""

import threading
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from ..config import get_settings
from ..errors import CapExceededError, DegreeError
from ..trees import Tree, TreeSet, graft, render, trees_of_degree


def rotations(t: Tree) -> Iterator[Tree]:
    """Every tree obtained from t by one increasing rotation."""
    if t.is_leaf:
        return
    if not t.left.is_leaf:
        a, b, c = t.left.left, t.left.right, t.right
        yield graft(a, graft(b, c))
    for left in rotations(t.left):
        yield graft(left, t.right)
    for right in rotations(t.right):
        yield graft(t.left, right)


def covers(t: Tree) -> TreeSet:
    """The upper covers of t."""
    return TreeSet.of(rotations(t), degree=t.degree)


@dataclass(eq=False)
class HasseDiagram:
    """
    Covering digraph on all trees of one degree.

    Attributes:
        degree: Number of internal vertices of every vertex
        vertices: All trees of that degree in canonical order
        cover_edges: (lower, upper) pairs, sorted by vertex index
        graph: The same data as a networkx DiGraph
    """
    degree: int
    vertices: Tuple[Tree, ...]
    cover_edges: Tuple[Tuple[Tree, Tree], ...]
    graph: nx.DiGraph = field(repr=False)
    _index: Dict[Tree, int] = field(default_factory=dict, repr=False)
    _up: Dict[Tree, FrozenSet[Tree]] = field(default_factory=dict, repr=False)
    _down: Dict[Tree, FrozenSet[Tree]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.vertices)}

    def index_of(self, t: Tree) -> int:
        return self._index[t]

    def edge_index_pairs(self) -> List[Tuple[int, int]]:
        return [(self.index_of(a), self.index_of(b)) for a, b in self.cover_edges]

    def up_set(self, t: Tree) -> FrozenSet[Tree]:
        """All r with t ≤ r (t included)."""
        found = self._up.get(t)
        if found is None:
            found = frozenset(nx.descendants(self.graph, t)) | {t}
            self._up[t] = found
        return found

    def down_set(self, t: Tree) -> FrozenSet[Tree]:
        """All r with r ≤ t (t included)."""
        found = self._down.get(t)
        if found is None:
            found = frozenset(nx.ancestors(self.graph, t)) | {t}
            self._down[t] = found
        return found

    def sources(self) -> List[Tree]:
        return [t for t in self.vertices if self.graph.in_degree(t) == 0]

    def sinks(self) -> List[Tree]:
        return [t for t in self.vertices if self.graph.out_degree(t) == 0]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization (vertex list + index pairs)."""
        return {
            "degree": self.degree,
            "vertices": [render(t) for t in self.vertices],
            "edges": [list(pair) for pair in self.edge_index_pairs()],
        }


def _build(degree: int) -> HasseDiagram:
    vertices = trees_of_degree(degree)
    index = {t: i for i, t in enumerate(vertices)}
    edges = [(t, u) for t in vertices for u in covers(t)]
    edges.sort(key=lambda e: (index[e[0]], index[e[1]]))

    graph = nx.DiGraph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    return HasseDiagram(degree=degree, vertices=vertices, cover_edges=tuple(edges), graph=graph)


_DIAGRAMS: Dict[int, HasseDiagram] = {}
_LOCK = threading.Lock()


def hasse(degree: int, cap: Optional[int] = None) -> HasseDiagram:
    """
    The Hasse diagram of the Tamari order in the given degree (memoized).

    Args:
        degree: Number of internal vertices
        cap: Largest allowed degree; defaults to the configured hasse_cap

    Raises:
        CapExceededError: degree > cap
    """
    cap = get_settings().hasse_cap if cap is None else cap
    if degree < 0:
        raise DegreeError(f"degree must be non-negative, got {degree}")
    if degree > cap:
        raise CapExceededError("Hasse diagram", degree, cap)
    with _LOCK:
        diagram = _DIAGRAMS.get(degree)
        if diagram is None:
            diagram = _build(degree)
            _DIAGRAMS[degree] = diagram
    return diagram


def _same_degree(a: Tree, b: Tree) -> None:
    if a.degree != b.degree:
        raise DegreeError(
            f"trees of degree {a.degree} and {b.degree} are not comparable"
        )


def leq(a: Tree, b: Tree) -> bool:
    """a ≤ b in the Tamari order."""
    _same_degree(a, b)
    return b in hasse(a.degree).up_set(a)


def interval(a: Tree, b: Tree) -> TreeSet:
    """All r with a ≤ r ≤ b; empty when a ≰ b."""
    _same_degree(a, b)
    diagram = hasse(a.degree)
    return TreeSet.of(diagram.up_set(a) & diagram.down_set(b), degree=a.degree)


def under(t: Tree, s: Tree) -> Tree:
    """t/s: the root of t grafted on the leftmost leaf of s."""
    if s.is_leaf:
        return t
    return graft(under(t, s.left), s.right)


def over(t: Tree, s: Tree) -> Tree:
    """t\\s: the root of s grafted on the rightmost leaf of t."""
    if t.is_leaf:
        return s
    return graft(t.left, over(t.right, s))
