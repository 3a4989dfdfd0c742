"""
src/geometry/facets.py

Exact facet enumeration for small point sets.

The points may sit in a proper affine subspace (the Tamari and Loday points
all lie in a hyperplane Σx = const). We find the affine dimension k, pick k
coordinates on which the projection of that subspace is injective, and work
in Z^k:

    for every k-subset of points that is affinely independent,
        the hyperplane through it is a facet
        iff every point lies on one closed side of it.

Normals are primitive integer vectors, lifted back to the ambient space with
zeros on the dropped coordinates, oriented so that normal·p >= offset holds
for all points. All arithmetic is exact (sympy rationals); brute force is
fine for the sizes used here (at most a few dozen points, k <= 4).
"""

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple

import sympy

from ..errors import GeometryError
from .codes import LatticePoint

MAX_DIMENSION = 4


@dataclass(frozen=True, order=True)
class Facet:
    """The inequality normal·p >= offset."""
    normal: Tuple[int, ...]
    offset: int

    def slack(self, point: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.normal, point)) - self.offset

    def is_tight(self, point: Sequence[int]) -> bool:
        return self.slack(point) == 0


@dataclass
class FacetSystem:
    """
    Hull of a point set, described by its facets.

    Attributes:
        points: The input points, in input order
        dimension: Affine dimension of the points
        facets: Facet inequalities in sorted order
        incidence: incidence[f][p] is True when facet f is tight at point p
    """
    points: Tuple[LatticePoint, ...]
    dimension: int
    facets: Tuple[Facet, ...]
    incidence: Tuple[Tuple[bool, ...], ...] = field(repr=False)

    def tight_facets(self, point_index: int) -> FrozenSet[int]:
        return frozenset(f for f, row in enumerate(self.incidence) if row[point_index])

    def rank_of(self, facet_indices: FrozenSet[int]) -> int:
        if not facet_indices:
            return 0
        return sympy.Matrix([list(self.facets[f].normal) for f in sorted(facet_indices)]).rank()

    def face_dimension(self, facet_indices: FrozenSet[int]) -> int:
        """Dimension of the face cut out by the given facets (assumed non-empty)."""
        return self.dimension - self.rank_of(facet_indices)

    def is_vertex(self, point_index: int) -> bool:
        return self.face_dimension(self.tight_facets(point_index)) == 0

    def vertices(self) -> List[int]:
        """Indices of the points that are vertices of the hull."""
        return [i for i in range(len(self.points)) if self.is_vertex(i)]

    def is_edge(self, i: int, j: int) -> bool:
        """True when vertices i and j are the two ends of an edge of the hull."""
        if i == j or not (self.is_vertex(i) and self.is_vertex(j)):
            return False
        common = self.tight_facets(i) & self.tight_facets(j)
        return bool(common) and self.face_dimension(common) == 1

    def satisfies_all(self, point: Sequence[int]) -> bool:
        return all(f.slack(point) >= 0 for f in self.facets)

    def to_dict(self) -> Dict:
        return {
            "dimension": self.dimension,
            "facets": [{"normal": list(f.normal), "offset": f.offset} for f in self.facets],
        }


def _primitive(vector: Sequence[sympy.Rational]) -> Tuple[int, ...]:
    denominators = [sympy.Rational(v).q for v in vector]
    scale = reduce(sympy.ilcm, denominators, 1)
    ints = [int(sympy.Rational(v) * scale) for v in vector]
    divisor = reduce(gcd, (abs(v) for v in ints), 0) or 1
    return tuple(v // divisor for v in ints)


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    return sympy.Matrix(diffs).rank()


def facet_system(points: Sequence[LatticePoint]) -> FacetSystem:
    """
    Facets of the convex hull of integer points.

    Args:
        points: At least three points of affine dimension 2..4

    Raises:
        GeometryError: dimension below 2 (no facets to speak of) or above 4
    """
    points = tuple(points)
    if not points:
        raise GeometryError("facet_system needs at least one point")
    ambient = len(points[0])
    if any(len(p) != ambient for p in points):
        raise GeometryError("points have different lengths")

    raw = [list(p.coords) for p in points]
    dimension = affine_dimension(raw)
    if dimension < 2:
        raise GeometryError(
            f"points span an affine space of dimension {dimension}; need at least 2"
        )
    if dimension > MAX_DIMENSION:
        raise GeometryError(
            f"points span dimension {dimension}; brute force is limited to {MAX_DIMENSION}"
        )

    base = raw[0]
    diff_matrix = sympy.Matrix([[a - b for a, b in zip(p, base)] for p in raw[1:]])
    _, pivots = diff_matrix.rref()
    projected = [[p[c] for c in pivots] for p in raw]

    found = set()
    for subset in combinations(range(len(points)), dimension):
        anchor = projected[subset[0]]
        rows = [[a - b for a, b in zip(projected[i], anchor)] for i in subset[1:]]
        null = sympy.Matrix(rows).nullspace() if rows else []
        if len(null) != 1:
            continue
        w = _primitive(list(null[0]))
        offset = sum(a * b for a, b in zip(w, anchor))
        values = [sum(a * b for a, b in zip(w, q)) - offset for q in projected]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            w, offset = tuple(-a for a in w), -offset
        else:
            continue
        lifted = [0] * ambient
        for c, a in zip(pivots, w):
            lifted[c] = a
        found.add(Facet(tuple(lifted), offset))

    facets = tuple(sorted(found))
    incidence = tuple(tuple(f.is_tight(p) for p in raw) for f in facets)
    return FacetSystem(points=points, dimension=dimension, facets=facets, incidence=incidence)
