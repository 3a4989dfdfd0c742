"""
Tests for Tamari codes, Loday points, canopy/section and the facet engine.
"""

import json

import pytest

from src.config import configure, reset_settings
from src.errors import CapExceededError, DegreeError, GeometryError, TreeParseError
from src.geometry import (
    Canopy,
    CoordinateMap,
    LatticePoint,
    all_canopies,
    canopy,
    certify_extreme,
    covering_edge_vectors,
    export_coords,
    facet_system,
    fiber,
    loday_coords,
    loday_coords_by_subtrees,
    section,
    tamari_code,
    to_word,
    verify_associahedron,
    verify_hypercube,
)
from src.tamari import leq
from src.trees import LEAF, parse, render, right_comb, trees_of_degree


@pytest.fixture(autouse=True)
def fresh_settings():
    reset_settings()
    yield
    reset_settings()


def point(*coords):
    return LatticePoint(tuple(coords))


def test_parenthesized_word():
    assert to_word(parse("((. .) .)")) == "((x0x1)x2)"
    assert to_word(parse("(. (. .))")) == "(x0(x1x2))"
    with pytest.raises(DegreeError):
        to_word(LEAF)


@pytest.mark.parametrize(
    "text, code",
    [
        ("(. .)", (1,)),
        ("((. .) .)", (2, 0)),
        ("(. (. .))", (1, 1)),
        ("((. (. .)) .)", (2, 1, 0)),
        ("(. ((. .) .))", (1, 2, 0)),
        ("((. .) (. .))", (2, 0, 1)),
        ("(((. .) .) .)", (3, 0, 0)),
        ("(. (. (. .)))", (1, 1, 1)),
    ],
)
def test_tamari_codes(text, code):
    assert tamari_code(parse(text)).coords == code


@pytest.mark.parametrize("d", range(1, 7))
def test_codes_share_a_hyperplane_and_are_injective(d):
    codes = [tamari_code(t) for t in trees_of_degree(d)]
    assert all(len(c) == d and c.total == d for c in codes)
    assert len(set(codes)) == len(codes)


@pytest.mark.parametrize(
    "text, coords",
    [
        ("((. .) (. .))", (1, 4, 1)),
        ("((. .) .)", (1, 2)),
        ("(. (. .))", (2, 1)),
        ("(. .)", (1,)),
    ],
)
def test_loday_points(text, coords):
    assert loday_coords(parse(text)).coords == coords


@pytest.mark.parametrize("d", range(1, 7))
def test_loday_two_ways_agree(d):
    for t in trees_of_degree(d):
        p = loday_coords(t)
        assert p == loday_coords_by_subtrees(t)
        assert p.total == d * (d + 1) // 2


def test_point_text():
    assert str(point(1, 4, 1)) == "(1, 4, 1)"
    assert list(point(2, 0)) == [2, 0]


def test_canopy_examples():
    assert str(canopy(parse("(. ((. .) .))"))) == "-+"
    assert str(canopy(parse("(((. .) .) .)"))) == "++"
    assert str(canopy(parse("(. (. (. .)))"))) == "--"
    assert str(canopy(parse("(. .)"))) == ""
    with pytest.raises(DegreeError):
        canopy(LEAF)


def test_deep_tree_codes():
    deep = right_comb(1200)
    assert list(tamari_code(deep)) == [1] * 1200
    assert to_word(deep).endswith("x1200" + ")" * 1200)
    assert str(canopy(deep)) == "-" * 1199


def test_canopy_parsing():
    assert Canopy.from_string("-+-").signs == ("-", "+", "-")
    assert len(Canopy.from_string("")) == 0
    with pytest.raises(TreeParseError) as excinfo:
        Canopy.from_string("-x")
    assert excinfo.value.position == 1


@pytest.mark.parametrize(
    "signs, tree",
    [
        ("", "(. .)"),
        ("-", "(. (. .))"),
        ("+", "((. .) .)"),
        ("-+", "(. ((. .) .))"),
        ("+-", "((. .) (. .))"),
        ("--", "(. (. (. .)))"),
        ("++", "(((. .) .) .)"),
    ],
)
def test_section_examples(signs, tree):
    assert render(section(Canopy.from_string(signs))) == tree


@pytest.mark.parametrize("n", range(6))
def test_section_is_a_section(n):
    for c in all_canopies(n):
        s = section(c)
        assert canopy(s) == c
        assert all(leq(t, s) for t in fiber(c))


def test_fibers_partition_the_trees():
    members = [t for c in all_canopies(3) for t in fiber(c)]
    assert sorted(members) == sorted(trees_of_degree(4))
    assert len(all_canopies(3)) == 8


def test_facets_of_a_square():
    system = facet_system([point(0, 0), point(1, 0), point(0, 1), point(1, 1)])
    assert system.dimension == 2
    assert len(system.facets) == 4
    assert sorted(system.vertices()) == [0, 1, 2, 3]
    assert system.is_edge(0, 1) and not system.is_edge(0, 3)


def test_facets_find_the_interior_point():
    system = facet_system([point(0, 0), point(2, 0), point(0, 2), point(2, 2), point(1, 1)])
    assert len(system.facets) == 4
    assert 4 not in system.vertices()
    assert not system.tight_facets(4)


def test_facets_work_inside_a_hyperplane():
    # a triangle in the plane x + y + z = 1
    system = facet_system([point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)])
    assert system.dimension == 2
    assert len(system.facets) == 3
    for facet in system.facets:
        assert sum(1 for p in system.points if facet.is_tight(p)) == 2


def test_degenerate_point_sets():
    with pytest.raises(GeometryError):
        facet_system([point(0, 0), point(1, 1)])
    with pytest.raises(GeometryError):
        facet_system([])
    with pytest.raises(GeometryError):
        facet_system([point(0, 0), point(1, 0, 0)])


def test_certify_extreme():
    square = [[0, 0], [1, 0], [0, 1], [1, 1], [0, 0]]
    assert certify_extreme(square, 3) is not None
    middle = [[0, 0], [2, 0], [1, 0]]
    assert certify_extreme(middle, 2) is None


@pytest.mark.parametrize("n", [2, 3])
def test_tamari_points_form_a_cube(n):
    report = verify_hypercube(n)
    assert report.passed, report.failures
    assert report.vertex_count == 2 ** n
    assert report.facet_count == 2 * n
    assert len(report.certificates) == 2 ** n
    assert report.to_dict()["passed"] is True


def test_hypercube_range():
    with pytest.raises(DegreeError):
        verify_hypercube(4)


@pytest.mark.parametrize("d", range(1, 6))
def test_tamari_covering_moves_are_unit_transfers(d):
    report = covering_edge_vectors(d, CoordinateMap.TAMARI)
    assert report.passed
    for _, _, vector in report.vectors:
        assert sum(v * v for v in vector) == 2


def test_loday_covering_vectors():
    report = covering_edge_vectors(2, CoordinateMap.LODAY)
    assert report.multiset() == {(1, -1): 1}
    assert report.to_dict()["vectors"] == [{"vector": [1, -1], "count": 1}]


@pytest.mark.parametrize("n, facets", [(2, 5), (3, 9)])
def test_loday_points_span_the_associahedron(n, facets):
    report = verify_associahedron(n)
    assert report.passed, report.failures
    assert report.facet_count == facets
    assert report.vertex_count == report.point_count


def test_export_csv():
    assert export_coords(2, CoordinateMap.TAMARI) == (
        "tree,c0,c1\n"
        "(. (. .)),1,1\n"
        "((. .) .),2,0\n"
    )


def test_export_json():
    data = json.loads(export_coords(3, CoordinateMap.LODAY, fmt="json"))
    assert data["map"] == "loday"
    assert len(data["points"]) == 5
    assert {"tree": "((. .) (. .))", "coords": [1, 4, 1]} in data["points"]


def test_export_respects_the_cap():
    configure(enum_cap=3)
    with pytest.raises(CapExceededError):
        export_coords(4, CoordinateMap.TAMARI)
    with pytest.raises(ValueError):
        export_coords(2, CoordinateMap.TAMARI, fmt="xml")
