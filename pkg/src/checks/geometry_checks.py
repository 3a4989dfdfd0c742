"""
src/checks/geometry_checks.py

Coordinates of trees and the polytopes they span.
"""

from ..geometry import (
    Canopy,
    CoordinateMap,
    LatticePoint,
    all_canopies,
    canopy,
    covering_edge_vectors,
    facet_system,
    loday_coords,
    loday_coords_by_subtrees,
    points_for,
    section,
    tamari_code,
    verify_associahedron,
    verify_hypercube,
)
from ..trees import parse, trees_of_degree
from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally, show

TAMARI_CODES = {
    "((. .) .)": (2, 0),
    "(. (. .))": (1, 1),
    "((. (. .)) .)": (2, 1, 0),
}

LODAY_COORDS = {
    "((. .) (. .))": (1, 4, 1),
    "((. .) .)": (1, 2),
    "(. (. .))": (2, 1),
}

SECTIONS = {
    "-": "(. (. .))",
    "-+": "(. ((. .) .))",
    "--": "(. (. (. .)))",
}


def _coordinate_degree(ctx: CheckContext) -> int:
    return min(7, ctx.max_degree + 1)


def check_tamari_code(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for text, expected in TAMARI_CODES.items():
        found = tamari_code(parse(text)).coords
        tally.expect(found == expected, lambda: f"code of {text} is {found}, expected {expected}")
    for d in range(1, _coordinate_degree(ctx) + 1):
        points = [p for _, p in points_for(d, CoordinateMap.TAMARI)]
        tally.expect(
            all(p.total == d for p in points),
            lambda: f"degree {d}: codes are not in the hyperplane Σ = {d}",
        )
        tally.expect(len(set(points)) == len(points), lambda: f"degree {d}: code is not injective")
    return tally.outcome()


def check_loday(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for text, expected in LODAY_COORDS.items():
        found = loday_coords(parse(text)).coords
        tally.expect(found == expected, lambda: f"Loday point of {text} is {found}, expected {expected}")
    for d in range(1, _coordinate_degree(ctx) + 1):
        for t in trees_of_degree(d):
            tally.expect(
                loday_coords(t) == loday_coords_by_subtrees(t),
                lambda: f"word and subtree formulas disagree on {show(t)}",
            )
        points = [p for _, p in points_for(d, CoordinateMap.LODAY)]
        tally.expect(
            all(p.total == d * (d + 1) // 2 for p in points),
            lambda: f"degree {d}: Loday points are not in the hyperplane Σ = {d * (d + 1) // 2}",
        )
        tally.expect(len(set(points)) == len(points), lambda: f"degree {d}: Loday map is not injective")
    return tally.outcome()


def check_covering_vectors(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(1, min(6, ctx.max_degree) + 1):
        report = covering_edge_vectors(d, CoordinateMap.TAMARI)
        for failure in report.failures:
            tally.fail(failure)
        tally.examined += len(report.vectors)
    loday = covering_edge_vectors(2, CoordinateMap.LODAY)
    tally.expect(
        [v for _, _, v in loday.vectors] == [(1, -1)],
        lambda: f"Loday covering vectors at degree 2 are {loday.multiset()}",
    )
    return tally.outcome("every covering difference of the code is −e_i + e_j, i < j")


def check_canopy_section(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for signs, text in SECTIONS.items():
        found = section(Canopy.from_string(signs))
        tally.expect(found == parse(text), lambda: f"σ({signs}) = {show(found)}, expected {text}")
    for n in range(min(8, ctx.max_degree + 2) + 1):
        for c in all_canopies(n):
            image = section(c)
            tally.expect(canopy(image) == c, lambda: f"ψσ({c}) = {canopy(image)}")
    return tally.outcome()


def check_quadrilateral(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    square = [LatticePoint(p) for p in [(3, 0, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1)]]
    system = facet_system(square)
    tally.expect(len(system.facets) == 4, lambda: f"square has {len(system.facets)} facets")
    pentagon = [p for _, p in points_for(3, CoordinateMap.TAMARI)]
    hull = facet_system(pentagon)
    tally.expect(
        all(hull.satisfies_all(p) for p in pentagon),
        lambda: "a degree-3 code violates a facet of its own hull",
    )
    return tally.outcome()


def check_associahedron(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for n in (2, 3):
        report = verify_associahedron(n)
        for failure in report.failures:
            tally.fail(f"n={n}: {failure}")
        tally.examined += report.point_count
    return tally.outcome("Loday points are the vertices; hull edges are the covers")


def _hypercube(n: int):
    def run(ctx: CheckContext) -> CheckOutcome:
        tally = Tally()
        report = verify_hypercube(n)
        for failure in report.failures:
            tally.fail(failure)
        tally.examined = report.point_count
        return tally.outcome(
            f"{report.vertex_count} vertices, {report.facet_count} facets among {report.point_count} points"
        )
    return run


GEOMETRY_CHECKS = [
    CheckCase(
        id="geometry_tamari_code",
        category=CheckCategory.GEOMETRY,
        description="Tamari codes: worked values, common hyperplane, injectivity",
        run=check_tamari_code,
    ),
    CheckCase(
        id="geometry_loday",
        category=CheckCategory.GEOMETRY,
        description="Loday points: worked values, two formulas agree, injectivity",
        run=check_loday,
    ),
    CheckCase(
        id="geometry_covering_vectors",
        category=CheckCategory.GEOMETRY,
        description="covering pairs move the code by −e_i + e_j",
        run=check_covering_vectors,
    ),
    CheckCase(
        id="geometry_canopy_section",
        category=CheckCategory.GEOMETRY,
        description="ψ∘σ is the identity; worked values of σ",
        run=check_canopy_section,
    ),
    CheckCase(
        id="geometry_facets",
        category=CheckCategory.GEOMETRY,
        description="facet engine on the degree-3 square",
        run=check_quadrilateral,
    ),
    CheckCase(
        id="geometry_associahedron",
        category=CheckCategory.GEOMETRY,
        description="Loday points span the associahedron",
        run=check_associahedron,
    ),
]

HYPERCUBE_CHECKS = [
    CheckCase(
        id=f"hypercube_n{n}",
        category=CheckCategory.HYPERCUBE,
        description=f"Tamari codes span a {n}-cube with vertices σ({{±}}^{n})",
        run=_hypercube(n),
    )
    for n in (2, 3)
]
