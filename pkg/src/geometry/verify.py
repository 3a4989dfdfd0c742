"""
src/geometry/verify.py

Checks of the polytope realizations, plus coordinate export.

verify_hypercube(n)        the Tamari points M(t), t ∈ PBT_(n+2), span a
                           combinatorial n-cube whose vertices are the
                           σ-images; every other M(t) lies on a face that
                           contains M(σψ(t)).
covering_edge_vectors(...) M(b) − M(a) over all covering pairs a ⋖ b.
verify_associahedron(n)    every Loday point is a vertex, and the hull's
                           edges are exactly the covering pairs.
export_coords(...)         CSV / JSON tables of either map.

A failed property never raises: it is recorded in the report's `failures`
with the offending tree.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import get_settings
from ..errors import CapExceededError, DegreeError
from ..tamari import hasse
from ..trees import Tree, render, trees_of_degree
from .canopy import all_canopies, canopy, section
from .codes import CoordinateMap, LatticePoint
from .facets import FacetSystem, facet_system

HYPERCUBE_RANGE = (2, 3)


def points_for(degree: int, coordinate_map: CoordinateMap) -> List[Tuple[Tree, LatticePoint]]:
    """(tree, point) for every tree of the degree, in canonical order."""
    if degree < 1:
        raise DegreeError(f"coordinates need degree >= 1, got {degree}")
    return [(t, coordinate_map.of(t)) for t in trees_of_degree(degree)]


def certify_extreme(
    points: Sequence[Sequence[int]],
    index: int,
    max_box: int = 4,
) -> Optional[Tuple[int, ...]]:
    """
    Search for an integer functional uniquely maximized at points[index].

    Coefficient boxes [-B, B]^d are tried for B = 1 … max_box, each in
    itertools.product order, so the certificate found is deterministic.

    Returns:
        The functional, or None if none exists in the box
    """
    target = np.array(points[index], dtype=np.int64)
    others = np.array([p for i, p in enumerate(points) if i != index], dtype=np.int64)
    dim = len(target)
    for box in range(1, max_box + 1):
        for coeffs in product(range(-box, box + 1), repeat=dim):
            if box > 1 and max(abs(c) for c in coeffs) < box:
                continue
            c = np.array(coeffs, dtype=np.int64)
            if not c.any():
                continue
            if others.size == 0 or int(c @ target) > int((others @ c).max()):
                return tuple(int(v) for v in coeffs)
    return None


def _facet_certificate(system: FacetSystem, index: int) -> Optional[Tuple[int, ...]]:
    """Minus the sum of the tight normals at a vertex, checked for uniqueness."""
    tight = system.tight_facets(index)
    if not tight or not system.is_vertex(index):
        return None
    ambient = len(system.points[index])
    coeffs = tuple(
        -sum(system.facets[f].normal[c] for f in tight) for c in range(ambient)
    )
    values = [sum(a * b for a, b in zip(coeffs, p)) for p in system.points]
    best = values[index]
    if all(v < best for i, v in enumerate(values) if i != index):
        return coeffs
    return None


@dataclass
class HypercubeReport:
    """Outcome of verify_hypercube."""
    n: int
    point_count: int
    facet_count: int
    vertex_count: int
    certificates: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "passed": self.passed,
            "point_count": self.point_count,
            "facet_count": self.facet_count,
            "vertex_count": self.vertex_count,
            "certificates": {k: list(v) for k, v in self.certificates.items()},
            "failures": list(self.failures),
        }


def verify_hypercube(n: int) -> HypercubeReport:
    """
    Check that the Tamari polytope KT^n is hypercube shaped.

    Args:
        n: 2 or 3 (points M(t) for the trees of degree n + 1)

    Returns:
        HypercubeReport; passed is True when every assertion holds
    """
    if n not in HYPERCUBE_RANGE:
        raise DegreeError(f"verify_hypercube supports n in {HYPERCUBE_RANGE}, got {n}")

    pairs = points_for(n + 1, CoordinateMap.TAMARI)
    trees = [t for t, _ in pairs]
    raw = [list(p.coords) for _, p in pairs]
    system = facet_system([p for _, p in pairs])
    where = {t: i for i, t in enumerate(trees)}

    report = HypercubeReport(
        n=n,
        point_count=len(pairs),
        facet_count=len(system.facets),
        vertex_count=0,
    )

    sigma_indices = {}
    for alpha in all_canopies(n):
        s = section(alpha)
        i = where[s]
        sigma_indices[str(alpha)] = i
        certificate = certify_extreme(raw, i)
        if certificate is None:
            report.failures.append(
                f"no functional is uniquely maximized at M(σ({alpha})) = {render(s)}"
            )
        else:
            report.certificates[str(alpha)] = certificate
        tight = len(system.tight_facets(i))
        if tight != n:
            report.failures.append(f"σ({alpha}) = {render(s)} is tight on {tight} facets, expected {n}")

    vertices = set(system.vertices())
    report.vertex_count = len(vertices)
    if len(vertices) != 2 ** n:
        report.failures.append(f"hull has {len(vertices)} vertices, expected {2 ** n}")
    if vertices != set(sigma_indices.values()):
        strays = sorted(render(trees[i]) for i in vertices - set(sigma_indices.values()))
        report.failures.append(f"hull vertices are not the σ-images: extra {strays}")

    for i, t in enumerate(trees):
        home = sigma_indices[str(canopy(t))]
        tight = system.tight_facets(i)
        if not tight:
            report.failures.append(f"M({render(t)}) is interior to the hull")
        elif not tight <= system.tight_facets(home):
            report.failures.append(
                f"M({render(t)}) is tight on a facet missing M(σψ(t)) = M({render(trees[home])})"
            )
    if n == 2:
        _check_square_midpoint(raw, report)
    return report


def _check_square_midpoint(raw: List[List[int]], report: HypercubeReport) -> None:
    """For n = 2 the one non-vertex point halves the edge it sits on."""
    by_coords = {tuple(p): p for p in raw}
    middle = by_coords.get((2, 1, 0))
    left = by_coords.get((3, 0, 0))
    right = by_coords.get((1, 2, 0))
    if middle is None or left is None or right is None:
        report.failures.append("square is missing one of (3, 0, 0), (2, 1, 0), (1, 2, 0)")
        return
    if not np.array_equal(2 * np.array(middle), np.array(left) + np.array(right)):
        report.failures.append("(2, 1, 0) is not the midpoint of (3, 0, 0) and (1, 2, 0)")


@dataclass
class EdgeVectorReport:
    """Outcome of covering_edge_vectors."""
    degree: int
    coordinate_map: CoordinateMap
    vectors: List[Tuple[Tree, Tree, Tuple[int, ...]]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def multiset(self) -> Counter:
        return Counter(v for _, _, v in self.vectors)

    def to_dict(self) -> Dict[str, Any]:
        counts = sorted(self.multiset().items())
        return {
            "degree": self.degree,
            "map": self.coordinate_map.value,
            "passed": self.passed,
            "vectors": [{"vector": list(v), "count": c} for v, c in counts],
            "failures": list(self.failures),
        }


def _is_unit_transfer(vector: Sequence[int]) -> bool:
    """True for −e_i + e_j with i < j."""
    nonzero = [(i, v) for i, v in enumerate(vector) if v != 0]
    return len(nonzero) == 2 and nonzero[0][1] == -1 and nonzero[1][1] == 1


def covering_edge_vectors(degree: int, coordinate_map: CoordinateMap) -> EdgeVectorReport:
    """
    Difference vectors M(b) − M(a) over every covering pair a ⋖ b.

    For the Tamari code each difference must be −e_i + e_j with i < j (every
    covering segment has squared length 2). Loday differences are only
    collected.
    """
    if degree < 1:
        raise DegreeError(f"coordinates need degree >= 1, got {degree}")
    report = EdgeVectorReport(degree=degree, coordinate_map=coordinate_map)
    for a, b in hasse(degree).cover_edges:
        diff = np.array(coordinate_map.of(b).coords) - np.array(coordinate_map.of(a).coords)
        vector = tuple(int(v) for v in diff)
        report.vectors.append((a, b, vector))
        if coordinate_map is CoordinateMap.TAMARI and not _is_unit_transfer(vector):
            report.failures.append(
                f"{render(a)} -> {render(b)} moves the code by {vector}"
            )
    return report


@dataclass
class AssociahedronReport:
    """Outcome of verify_associahedron."""
    n: int
    point_count: int
    facet_count: int
    vertex_count: int
    edge_count: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "passed": self.passed,
            "point_count": self.point_count,
            "facet_count": self.facet_count,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "failures": list(self.failures),
        }


def hull_edges(system: FacetSystem) -> List[Tuple[int, int]]:
    vertices = system.vertices()
    return [(i, j) for k, i in enumerate(vertices) for j in vertices[k + 1:] if system.is_edge(i, j)]


def verify_associahedron(n: int) -> AssociahedronReport:
    """
    Check Loday's realization in dimension n (trees of degree n + 1): all
    points are certified vertices, there are n(n+3)/2 facets, and hull edges
    coincide with covering pairs.
    """
    if n not in HYPERCUBE_RANGE:
        raise DegreeError(f"verify_associahedron supports n in {HYPERCUBE_RANGE}, got {n}")
    pairs = points_for(n + 1, CoordinateMap.LODAY)
    trees = [t for t, _ in pairs]
    raw = [list(p.coords) for _, p in pairs]
    system = facet_system([p for _, p in pairs])
    edges = hull_edges(system)

    report = AssociahedronReport(
        n=n,
        point_count=len(pairs),
        facet_count=len(system.facets),
        vertex_count=len(system.vertices()),
        edge_count=len(edges),
    )
    for i, t in enumerate(trees):
        if certify_extreme(raw, i) is None and _facet_certificate(system, i) is None:
            report.failures.append(f"Loday point of {render(t)} is not extreme")
    expected_facets = n * (n + 3) // 2
    if report.facet_count != expected_facets:
        report.failures.append(f"hull has {report.facet_count} facets, expected {expected_facets}")

    where = {t: i for i, t in enumerate(trees)}
    covering = {tuple(sorted((where[a], where[b]))) for a, b in hasse(n + 1).cover_edges}
    if set(edges) != covering:
        report.failures.append(
            f"hull edges ({len(edges)}) differ from covering pairs ({len(covering)})"
        )
    return report


def export_coords(degree: int, coordinate_map: CoordinateMap, fmt: str = "csv") -> str:
    """
    Coordinate table, one row per tree in canonical order.

    Args:
        degree: Degree of the trees (1 … enum cap)
        coordinate_map: TAMARI or LODAY
        fmt: "csv" (header tree,c0,c1,…) or "json"
    """
    cap = get_settings().enum_cap
    if degree > cap:
        raise CapExceededError("coordinate export", degree, cap)
    pairs = points_for(degree, coordinate_map)
    if fmt == "json":
        payload = {
            "degree": degree,
            "map": coordinate_map.value,
            "points": [{"tree": render(t), "coords": list(p.coords)} for t, p in pairs],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    frame = pd.DataFrame(
        [[render(t), *p.coords] for t, p in pairs],
        columns=["tree"] + [f"c{i}" for i in range(degree)],
    )
    return frame.to_csv(index=False, lineterminator="\n")
