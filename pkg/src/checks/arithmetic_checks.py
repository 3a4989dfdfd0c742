"""
src/checks/arithmetic_checks.py

Relations between ⊣, ⊢ and +, and the arithmetic built on them: sums of
integers, small worked examples, multiplication and its
distributivity.

The three relations checked on every triple (r, s, t):

    (r ⊣ s) ⊣ t = r ⊣ (s + t)
    (r ⊢ s) ⊣ t = r ⊢ (s ⊣ t)
    (r + s) ⊢ t = r ⊢ (s ⊢ t)
"""

from itertools import product
from typing import Iterator, List, Tuple

from ..arithmetic import (
    ONE,
    decompose,
    decomposition_mismatches,
    distinct_evaluations,
    embed,
    evaluate,
    find_right_distributivity_witness,
    multiply,
    op_left,
    op_right,
    project,
    tree_sum,
    w_left,
    w_right,
)
from ..trees import Tree, TreeSet, parse, trees_of_degree
from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally, show


def _trees_up_to(degree: int) -> List[Tree]:
    return [t for d in range(degree + 1) for t in trees_of_degree(d)]


def _triples(ctx: CheckContext) -> Iterator[Tuple[Tree, Tree, Tree]]:
    """All triples with every degree ≤ 2, then those of larger total degree ≤ max_degree."""
    small = _trees_up_to(2)
    yield from product(small, repeat=3)
    for degrees in _degree_triples(ctx.max_degree):
        if max(degrees) > 2:
            yield from product(*(trees_of_degree(d) for d in degrees))


def _degree_triples(total: int) -> Iterator[Tuple[int, int, int]]:
    for a in range(total + 1):
        for b in range(total + 1 - a):
            for c in range(total + 1 - a - b):
                yield a, b, c


def _relation_failures(r: Tree, s: Tree, t: Tree) -> List[str]:
    failures = []
    if op_left(op_left(r, s), t) != op_left(r, tree_sum(s, t)):
        failures.append("(r⊣s)⊣t ≠ r⊣(s+t)")
    if op_left(op_right(r, s), t) != op_right(r, op_left(s, t)):
        failures.append("(r⊢s)⊣t ≠ r⊢(s⊣t)")
    if op_right(tree_sum(r, s), t) != op_right(r, op_right(s, t)):
        failures.append("(r+s)⊢t ≠ r⊢(s⊢t)")
    return failures


def check_relations_exhaustive(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for r, s, t in _triples(ctx):
        broken = _relation_failures(r, s, t)
        tally.expect(not broken, lambda: f"{'; '.join(broken)} for {show(r, s, t)}")
    return tally.outcome(f"all triples of degree ≤ 2 and total degree ≤ {ctx.max_degree}")


def check_relations_random(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    rng = ctx.rng()
    pool = list(trees_of_degree(3))
    for _ in range(ctx.relation_samples):
        r, s, t = (ctx.pick(rng, pool) for _ in range(3))
        broken = _relation_failures(r, s, t)
        tally.expect(not broken, lambda: f"{'; '.join(broken)} for {show(r, s, t)}")
    return tally.outcome(f"{ctx.relation_samples} random triples at degree 3 (seed {ctx.seed})")


def check_sum_associativity(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for r, s, t in _triples(ctx):
        tally.expect(
            tree_sum(tree_sum(r, s), t) == tree_sum(r, tree_sum(s, t)),
            lambda: f"(r+s)+t ≠ r+(s+t) for {show(r, s, t)}",
        )
    return tally.outcome()


def check_eight_words(ctx: CheckContext) -> CheckOutcome:
    """Three copies of 1 give five single trees and two unions."""
    tally = Tally()
    groups = distinct_evaluations(3)
    singletons = [value for value in groups if len(value) == 1]
    tally.expect(len(groups) == 7, lambda: f"{len(groups)} distinct values, expected 7")
    tally.expect(
        TreeSet.of([next(iter(v)) for v in singletons], degree=3) == embed(3) and len(singletons) == 5,
        lambda: "singleton values do not cover the five trees of degree 3",
    )
    left_left = evaluate(w_left(w_left(ONE, ONE), ONE))
    tally.expect(
        left_left == evaluate(w_left(ONE, w_right(ONE, ONE))) | evaluate(w_left(ONE, w_left(ONE, ONE))),
        lambda: "(1⊣1)⊣1 ≠ 1⊣(1⊢1) ∪ 1⊣(1⊣1)",
    )
    right_right = evaluate(w_right(ONE, w_right(ONE, ONE)))
    tally.expect(
        right_right == evaluate(w_right(w_right(ONE, ONE), ONE)) | evaluate(w_right(w_left(ONE, ONE), ONE)),
        lambda: "1⊢(1⊢1) ≠ (1⊢1)⊢1 ∪ (1⊣1)⊢1",
    )
    tally.expect(
        evaluate(w_left(w_right(ONE, ONE), ONE)) == evaluate(w_right(ONE, w_left(ONE, ONE))),
        lambda: "(1⊢1)⊣1 ≠ 1⊢(1⊣1)",
    )
    return tally.outcome("words in three copies of 1")


def _set_of(*literals: str) -> TreeSet:
    return TreeSet.of([parse(text) for text in literals])


def check_worked_sums(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    one, two = embed(1), embed(2)
    cases = [
        ("1⊣1", op_left(one, one), _set_of("(. (. .))")),
        ("1⊢1", op_right(one, one), _set_of("((. .) .)")),
        ("2⊣1", op_left(two, one), _set_of("((. .) (. .))", "(. ((. .) .))", "(. (. (. .)))")),
        ("2⊢1", op_right(two, one), _set_of("(((. .) .) .)", "((. (. .)) .)")),
        ("1+1", tree_sum(one, one), embed(2)),
        ("2+1", tree_sum(two, one), embed(3)),
    ]
    for name, actual, expected in cases:
        tally.expect(actual == expected, lambda: f"{name} = {actual}, expected {expected}")
    return tally.outcome("sums of 1 and 2")


def check_sum_consistency(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for m in range(ctx.max_degree + 1):
        for n in range(ctx.max_degree + 1 - m):
            tally.expect(tree_sum(embed(m), embed(n)) == embed(m + n), lambda: f"{m}+{n} ≠ {m + n}")
    return tally.outcome(f"m + n ≤ {ctx.max_degree}")


def check_disjoint_split(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    pool = _trees_up_to(min(ctx.max_degree, 4))
    for s, t in product(pool, repeat=2):
        left, right = op_left(s, t), op_right(s, t)
        total = tree_sum(s, t)
        tally.expect(
            left.intersection(right).is_empty and len(total) == len(left) + len(right),
            lambda: f"⊣ and ⊢ overlap for {show(s, t)}",
        )
    return tally.outcome()


def check_grading(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    pool = _trees_up_to(min(ctx.max_degree, 4))
    for s, t in product(pool, repeat=2):
        if s.degree + t.degree <= ctx.max_degree:
            total = tree_sum(s, t)
            tally.expect(
                all(r.degree == s.degree + t.degree for r in total),
                lambda: f"s+t has a tree of the wrong degree for {show(s, t)}",
            )
        if s.degree * t.degree <= ctx.max_degree:
            prod = multiply(s, t)
            tally.expect(
                all(r.degree == s.degree * t.degree for r in prod),
                lambda: f"s×t has a tree of the wrong degree for {show(s, t)}",
            )
    return tally.outcome()


def check_decompose_roundtrip(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(1, ctx.max_degree + 1):
        for t in trees_of_degree(d):
            word = decompose(t)
            tally.expect(
                word.ones == d and evaluate(word) == TreeSet.singleton(t),
                lambda: f"decompose({show(t)}) does not evaluate back to it",
            )
    return tally.outcome()


def check_multiplication(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    ab, ba = parse("((. .) .)"), parse("(. (. .))")
    examples = [
        (ab, ba, _set_of("((. (. .)) (. .))")),
        (ab, ab, _set_of("(((. .) (. .)) .)", "((((. .) .) .) .)")),
    ]
    for s, t, expected in examples:
        actual = multiply(s, t)
        tally.expect(actual == expected, lambda: f"{show(s)} × {show(t)} = {actual}")

    for n in range(ctx.max_degree + 1):
        for m in range(ctx.max_degree + 1):
            if n * m <= ctx.max_degree:
                tally.expect(
                    multiply(embed(n), embed(m)) == embed(n * m),
                    lambda: f"{n}×{m} ≠ {n * m}",
                )

    bound = min(8, ctx.max_degree + 2)
    for degrees in product(range(1, bound + 1), repeat=3):
        if degrees[0] * degrees[1] * degrees[2] > bound:
            continue
        for a, b, c in product(*(trees_of_degree(d) for d in degrees)):
            tally.expect(
                multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
                lambda: f"(a×b)×c ≠ a×(b×c) for {show(a, b, c)}",
            )
    return tally.outcome()


def check_left_distributivity(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for r, s in product(trees_of_degree(1), repeat=2):
        for t in _trees_up_to(2):
            tally.expect(
                multiply(tree_sum(r, s), t) == tree_sum(multiply(r, t), multiply(s, t)),
                lambda: f"(r+s)×t ≠ r×t + s×t for {show(r, s, t)}",
            )
    return tally.outcome()


def check_right_distributivity_fails(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    witness = find_right_distributivity_witness(max_degree=2)
    tally.expect(witness is not None, lambda: "no failure of right distributivity up to degree 2")
    return tally.outcome(witness.describe() if witness else "")


def check_decomposition_independence(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    mismatches = decomposition_mismatches(max_degree=min(ctx.max_degree, 3), factor_degree=2)
    for mismatch in mismatches:
        tally.fail(mismatch.describe())
    tally.examined = sum(len(trees_of_degree(d)) for d in range(1, min(ctx.max_degree, 3) + 1))
    return tally.outcome("every word of each tree of degree ≤ 3")


def check_embedding(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for n in range(ctx.max_degree + 1):
        tally.expect(project(embed(n)) == n, lambda: f"project(embed({n})) ≠ {n}")
        for m in range(ctx.max_degree + 1):
            if n + m <= ctx.max_degree:
                tally.expect(
                    project(tree_sum(embed(n), embed(m))) == n + m,
                    lambda: f"project(embed({n}) + embed({m})) ≠ {n + m}",
                )
            if n * m <= ctx.max_degree:
                tally.expect(
                    project(multiply(embed(n), embed(m))) == n * m,
                    lambda: f"project(embed({n}) × embed({m})) ≠ {n * m}",
                )
    return tally.outcome()


RELATION_CHECKS = [
    CheckCase(
        id="relations_exhaustive",
        category=CheckCategory.RELATIONS,
        description="the three ⊣/⊢ relations on every small triple",
        run=check_relations_exhaustive,
    ),
    CheckCase(
        id="relations_random",
        category=CheckCategory.RELATIONS,
        description="the three ⊣/⊢ relations on random degree-3 triples",
        run=check_relations_random,
    ),
    CheckCase(
        id="relations_sum_associative",
        category=CheckCategory.RELATIONS,
        description="(r+s)+t = r+(s+t)",
        run=check_sum_associativity,
    ),
    CheckCase(
        id="relations_three_ones",
        category=CheckCategory.RELATIONS,
        description="eight words in 1 give five trees",
        run=check_eight_words,
    ),
]

ARITHMETIC_CHECKS = [
    CheckCase(
        id="arithmetic_worked_sums",
        category=CheckCategory.ARITHMETIC,
        description="1⊣1, 1⊢1, 2⊣1, 2⊢1, 1+1, 2+1",
        run=check_worked_sums,
    ),
    CheckCase(
        id="arithmetic_sum_consistency",
        category=CheckCategory.ARITHMETIC,
        description="embed(m) + embed(n) = embed(m+n)",
        run=check_sum_consistency,
    ),
    CheckCase(
        id="arithmetic_disjoint_split",
        category=CheckCategory.ARITHMETIC,
        description="s⊣t and s⊢t never share a tree",
        run=check_disjoint_split,
    ),
    CheckCase(
        id="arithmetic_grading",
        category=CheckCategory.ARITHMETIC,
        description="degrees add under + and multiply under ×",
        run=check_grading,
    ),
    CheckCase(
        id="arithmetic_decompose",
        category=CheckCategory.ARITHMETIC,
        description="evaluate(decompose(t)) = {t}",
        run=check_decompose_roundtrip,
    ),
    CheckCase(
        id="arithmetic_multiplication",
        category=CheckCategory.ARITHMETIC,
        description="worked products, n×m and associativity of ×",
        run=check_multiplication,
    ),
    CheckCase(
        id="arithmetic_left_distributive",
        category=CheckCategory.ARITHMETIC,
        description="(r+s)×t = r×t + s×t",
        run=check_left_distributivity,
    ),
    CheckCase(
        id="arithmetic_right_distributivity_witness",
        category=CheckCategory.ARITHMETIC,
        description="a triple with t×(r+s) ≠ t×r + t×s exists",
        run=check_right_distributivity_fails,
    ),
    CheckCase(
        id="arithmetic_decomposition_independence",
        category=CheckCategory.ARITHMETIC,
        description="every word of a tree multiplies the same way",
        run=check_decomposition_independence,
    ),
    CheckCase(
        id="arithmetic_embedding",
        category=CheckCategory.ARITHMETIC,
        description="project is compatible with + and ×",
        run=check_embedding,
    ),
]
