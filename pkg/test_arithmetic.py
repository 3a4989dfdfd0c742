"""
Tests for ⊣, ⊢, + and × on trees and on sets of trees.
"""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arithmetic import (
    ONE,
    ZERO,
    all_words,
    decompose,
    decomposition_mismatches,
    decompositions,
    distinct_evaluations,
    embed,
    evaluate,
    find_right_distributivity_witness,
    multiply,
    op_left,
    op_right,
    parse_word,
    project,
    render_word,
    tree_sum,
    w_left,
    w_right,
)
from src.errors import DegreeError, EmptySetError, TreeParseError, UnbalancedError
from src.trees import LEAF, TreeSet, parse, trees_of_degree

Y = parse("(. .)")


def trees(*literals):
    return TreeSet.of([parse(text) for text in literals])


def small_tree(max_degree=3):
    return st.integers(0, max_degree).flatmap(lambda d: st.sampled_from(trees_of_degree(d)))


def test_one_left_one_and_one_right_one():
    assert op_left(Y, Y) == trees("(. (. .))")
    assert op_right(Y, Y) == trees("((. .) .)")


def test_two_left_one_has_three_trees():
    assert op_left(embed(2), embed(1)) == trees("((. .) (. .))", "(. ((. .) .))", "(. (. (. .)))")


def test_two_right_one_has_two_trees():
    assert op_right(embed(2), embed(1)) == trees("(((. .) .) .)", "((. (. .)) .)")


def test_small_integer_sums():
    assert tree_sum(embed(1), embed(1)) == embed(2)
    assert tree_sum(embed(2), embed(1)) == embed(3)
    assert len(tree_sum(embed(2), embed(1))) == 5


@pytest.mark.parametrize("m, n", [(m, n) for m in range(7) for n in range(7) if m + n <= 6])
def test_sum_of_integers(m, n):
    assert tree_sum(embed(m), embed(n)) == embed(m + n)


def test_zero_conventions():
    t = parse("((. .) (. .))")
    assert op_left(t, LEAF) == TreeSet.singleton(t)
    assert op_right(t, LEAF).is_empty
    assert op_left(LEAF, t).is_empty
    assert op_right(LEAF, t) == TreeSet.singleton(t)
    assert tree_sum(LEAF, LEAF) == ZERO
    assert tree_sum(t, LEAF) == tree_sum(LEAF, t) == TreeSet.singleton(t)


@pytest.mark.parametrize("d", range(6))
def test_right_with_zero_on_the_left_is_identity(d):
    for t in trees_of_degree(d):
        assert op_right(LEAF, t) == TreeSet.singleton(t)


@settings(max_examples=150, deadline=None)
@given(small_tree(), small_tree(), small_tree())
def test_three_relations(r, s, t):
    assert op_left(op_left(r, s), t) == op_left(r, tree_sum(s, t))
    assert op_left(op_right(r, s), t) == op_right(r, op_left(s, t))
    assert op_right(tree_sum(r, s), t) == op_right(r, op_right(s, t))


@settings(max_examples=100, deadline=None)
@given(small_tree(), small_tree(), small_tree())
def test_sum_is_associative(r, s, t):
    assert tree_sum(tree_sum(r, s), t) == tree_sum(r, tree_sum(s, t))


def test_split_is_disjoint():
    pool = [t for d in range(5) for t in trees_of_degree(d)]
    for s, t in product(pool[:24], repeat=2):
        left, right = op_left(s, t), op_right(s, t)
        assert left.intersection(right).is_empty
        assert len(tree_sum(s, t)) == len(left) + len(right)
        assert tree_sum(s, t).degree == s.degree + t.degree


def test_empty_sets_propagate():
    empty = TreeSet(degree=2)
    assert tree_sum(empty, embed(1)).is_empty
    assert tree_sum(empty, embed(1)).degree == 3
    assert multiply(empty, embed(2)).is_empty


def test_embed_and_project():
    assert embed(0) == TreeSet.singleton(LEAF)
    assert len(embed(3)) == 5
    assert project(tree_sum(embed(2), embed(3))) == 5
    assert project(multiply(embed(2), embed(3))) == 6
    with pytest.raises(EmptySetError):
        project(TreeSet(degree=4))


def test_decompose_examples():
    assert decompose(parse("((. .) .)")) == w_right(ONE, ONE)
    assert decompose(parse("(. (. .))")) == w_left(ONE, ONE)
    assert render_word(decompose(parse("((. .) (. .))"))) == "(1 |> 1) <| 1"
    with pytest.raises(DegreeError):
        decompose(LEAF)


@pytest.mark.parametrize("d", range(1, 7))
def test_decompose_evaluates_back(d):
    for t in trees_of_degree(d):
        word = decompose(t)
        assert word.ones == d
        assert evaluate(word) == TreeSet.singleton(t)


def test_parentheses_can_be_dropped_in_the_middle():
    lhs = evaluate(w_left(w_right(ONE, ONE), ONE))
    rhs = evaluate(w_right(ONE, w_left(ONE, ONE)))
    assert lhs == rhs == trees("((. .) (. .))")


def test_right_right_splits_into_two_words():
    lhs = evaluate(w_right(ONE, w_right(ONE, ONE)))
    rhs = evaluate(w_right(w_right(ONE, ONE), ONE)) | evaluate(w_right(w_left(ONE, ONE), ONE))
    assert lhs == rhs


def test_eight_words_give_five_trees():
    assert len(all_words(3)) == 8
    groups = distinct_evaluations(3)
    singletons = [value for value in groups if len(value) == 1]
    assert len(singletons) == 5
    assert TreeSet.of([next(iter(v)) for v in singletons]) == embed(3)


def test_word_text_roundtrip():
    for w in all_words(4):
        assert parse_word(render_word(w)) == w
    assert parse_word(" ( 1|>1 ) <| 1 ") == decompose(parse("((. .) (. .))"))


@pytest.mark.parametrize(
    "text, error",
    [
        ("(1 <| 1", UnbalancedError),
        ("1 <| 1)", UnbalancedError),
        ("1 + 1", TreeParseError),
        ("1 <|", TreeParseError),
    ],
)
def test_bad_words(text, error):
    with pytest.raises(error):
        parse_word(text)


def test_decompositions_contain_canonical_word():
    for d in range(1, 4):
        for t in trees_of_degree(d):
            words = decompositions(t)
            assert decompose(t) in words


def test_products_of_worked_examples():
    ab, ba = parse("((. .) .)"), parse("(. (. .))")
    assert multiply(ab, ba) == trees("((. (. .)) (. .))")
    assert multiply(ab, ab) == trees("(((. .) (. .)) .)", "((((. .) .) .) .)")


def test_multiply_by_zero():
    assert multiply(embed(3), ZERO) == ZERO
    assert multiply(ZERO, embed(3)) == ZERO
    assert multiply(Y, parse("((. .) (. .))")) == trees("((. .) (. .))")


@pytest.mark.parametrize("n, m", [(n, m) for n in range(7) for m in range(7) if n * m <= 6])
def test_product_of_integers(n, m):
    assert multiply(embed(n), embed(m)) == embed(n * m)


def test_product_grading():
    for s in trees_of_degree(2):
        for t in trees_of_degree(3):
            assert all(r.degree == 6 for r in multiply(s, t))


def test_product_is_associative_on_small_trees():
    for degrees in [(1, 2, 2), (2, 2, 2), (2, 1, 3), (2, 2, 1), (1, 1, 4)]:
        for a, b, c in product(*(trees_of_degree(d) for d in degrees)):
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_left_distributivity():
    for t in [LEAF] + list(trees_of_degree(1)) + list(trees_of_degree(2)):
        assert multiply(tree_sum(Y, Y), t) == tree_sum(multiply(Y, t), multiply(Y, t))


def test_right_distributivity_fails_somewhere():
    witness = find_right_distributivity_witness(max_degree=2)
    assert witness is not None
    assert witness.product_of_sum != witness.sum_of_products
    assert "t×(r+s)" in witness.describe()


def test_every_word_multiplies_like_the_canonical_one():
    assert decomposition_mismatches(max_degree=3, factor_degree=2) == []
