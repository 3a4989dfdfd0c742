"""
Tests for planar binary trees: enumeration, parsing, canonical order and TreeSet.
"""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import DegreeError, TreeParseError, UnbalancedError
from src.trees import (
    LEAF,
    Tree,
    TreeSet,
    catalan,
    compare,
    enumerate_trees,
    graft,
    iter_leaves,
    left_comb,
    parse,
    render,
    right_comb,
    trees_of_degree,
)

any_tree = st.recursive(st.just(LEAF), lambda sub: st.builds(graft, sub, sub), max_leaves=12)


@pytest.mark.parametrize(
    "n_leaves, count",
    list(zip(range(1, 11), [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862])),
)
def test_enumeration_sizes_are_catalan_numbers(n_leaves, count):
    assert len(enumerate_trees(n_leaves)) == count
    assert catalan(n_leaves - 1) == count


def test_enumerate_rejects_zero_leaves():
    with pytest.raises(DegreeError):
        enumerate_trees(0)
    with pytest.raises(DegreeError):
        trees_of_degree(-1)


def test_small_enumerations_in_canonical_order():
    assert [render(t) for t in enumerate_trees(1)] == ["."]
    assert [render(t) for t in enumerate_trees(2)] == ["(. .)"]
    assert [render(t) for t in enumerate_trees(3)] == ["(. (. .))", "((. .) .)"]
    assert [render(t) for t in enumerate_trees(4)] == [
        "(. (. (. .)))",
        "(. ((. .) .))",
        "((. .) (. .))",
        "((. (. .)) .)",
        "(((. .) .) .)",
    ]


def test_graft_adds_degrees():
    pool = [t for d in range(5) for t in trees_of_degree(d)]
    for a in pool[:20]:
        for b in pool[:20]:
            assert graft(a, b).degree == a.degree + b.degree + 1


def test_leaf_and_node_properties():
    assert LEAF.is_leaf and LEAF.degree == 0 and LEAF.leaves == 1
    y = parse("(. .)")
    assert not y.is_leaf and y.degree == 1 and y.leaves == 2
    assert repr(y) == "Tree('(. .)')"


def test_half_node_is_rejected():
    with pytest.raises(DegreeError):
        Tree(LEAF, None)


def test_combs():
    assert render(left_comb(3)) == "(((. .) .) .)"
    assert render(right_comb(3)) == "(. (. (. .)))"
    assert left_comb(0) == LEAF == right_comb(0)


def test_parse_accepts_any_spacing():
    assert parse("  ( .\t( . . ) )\n") == parse("(. (. .))")
    assert parse(".") == LEAF


@pytest.mark.parametrize(
    "text, position",
    [
        ("((. .) .", 8),
        ("(. .))", 5),
        ("((", 2),
    ],
)
def test_unbalanced_literals(text, position):
    with pytest.raises(UnbalancedError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert f"at position {position}" in str(excinfo.value)


@pytest.mark.parametrize(
    "text, position, message",
    [
        ("(.)", 2, "a node needs two subtrees"),
        ("(. x)", 3, "unexpected character"),
        ("", 0, "empty tree literal"),
        ("(. . .)", 5, "expected ')'"),
        (". .", 2, "trailing input"),
    ],
)
def test_malformed_literals(text, position, message):
    with pytest.raises(TreeParseError) as excinfo:
        parse(text)
    assert not isinstance(excinfo.value, UnbalancedError)
    assert excinfo.value.position == position
    assert message in str(excinfo.value)


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse("(")


@given(any_tree)
def test_render_parse_roundtrip(t):
    assert parse(render(t)) == t
    assert hash(parse(render(t))) == hash(t)


@given(any_tree, any_tree)
def test_compare_is_consistent(a, b):
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) == 0) == (a == b)
    assert (compare(a, b) < 0) == (a < b)


def test_canonical_order_is_strict():
    for d in range(6):
        trees = trees_of_degree(d)
        assert all(compare(a, b) == -1 for a, b in zip(trees, trees[1:]))


def test_iter_leaves_sides():
    sides = [side for _, side in iter_leaves(parse("((. .) (. .))"))]
    assert sides == ["left", "right", "left", "right"]
    assert list(iter_leaves(LEAF)) == [(None, None)]


def test_treeset_canonicalizes():
    a, b = parse("((. .) .)"), parse("(. (. .))")
    s = TreeSet.of([a, b, a])
    assert s.members == (b, a)
    assert len(s) == 2 and a in s
    assert str(s) == "{(. (. .)), ((. .) .)}"
    assert s.render_lines() == "(. (. .))\n((. .) .)\n"


def test_treeset_degree_rules():
    with pytest.raises(DegreeError):
        TreeSet.of([])
    assert TreeSet.of([], degree=3).is_empty
    with pytest.raises(DegreeError):
        TreeSet.of([parse("(. .)"), parse("(. (. .))")])
    with pytest.raises(DegreeError):
        TreeSet.full(1) | TreeSet.full(2)


def test_treeset_json_roundtrip():
    s = TreeSet.full(3)
    data = json.loads(s.to_json())
    assert data["degree"] == 3
    assert data["trees"][2] == "((. .) (. .))"
    assert TreeSet.from_dict(data) == s


def test_treeset_union_and_intersection():
    left = TreeSet.of([parse("(. (. .))")])
    right = TreeSet.of([parse("((. .) .)")])
    assert left | right == TreeSet.full(2)
    assert left.intersection(right).is_empty
    assert TreeSet.full(2).intersection(left) == left


def test_deep_trees_parse_and_render():
    text = render(right_comb(1200))
    assert text.startswith("(. (. ") and text.endswith(".)" + ")" * 1199)
    deep = parse(text)
    assert deep.degree == 1200
    assert render(deep) == text
    assert parse(render(left_comb(1200))).degree == 1200
