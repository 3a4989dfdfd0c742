"""
src/checks/tree_checks.py

Enumeration, grafting and text round-trip of planar binary trees.
"""

from typing import List

from ..trees import catalan, compare, enumerate_trees, graft, parse, render, trees_of_degree
from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally, show

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def check_catalan(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for n_leaves, expected in enumerate(CATALAN, start=1):
        count = len(enumerate_trees(n_leaves))
        tally.expect(
            count == expected == catalan(n_leaves - 1),
            lambda: f"{n_leaves} leaves: {count} trees, expected {expected}",
        )
    return tally.outcome(f"trees with 1..{len(CATALAN)} leaves")


def check_graft_degree(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    pool = [t for d in range(min(ctx.max_degree, 4) + 1) for t in trees_of_degree(d)]
    for a in pool:
        for b in pool:
            g = graft(a, b)
            tally.expect(
                g.degree == a.degree + b.degree + 1 and g.leaves == a.leaves + b.leaves,
                lambda: f"graft({show(a, b)}) has degree {g.degree}",
            )
    return tally.outcome()


def check_roundtrip(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(ctx.max_degree + 1):
        for t in trees_of_degree(d):
            text = render(t)
            tally.expect(parse(text) == t, lambda: f"{text} does not parse back to itself")
            tally.expect(
                parse(f"  {text.replace(' ', '   ')} \n") == t,
                lambda: f"{text} is not whitespace-insensitive",
            )
    return tally.outcome()


def check_canonical_order(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(ctx.max_degree + 1):
        trees: List = list(trees_of_degree(d))
        for a, b in zip(trees, trees[1:]):
            tally.expect(
                compare(a, b) == -1 and compare(b, a) == 1 and compare(a, a) == 0,
                lambda: f"canonical order broken at {show(a, b)}",
            )
        tally.expect(len(set(trees)) == len(trees), lambda: f"duplicates at degree {d}")
    return tally.outcome()


TREE_CHECKS = [
    CheckCase(
        id="trees_catalan",
        category=CheckCategory.TREES,
        description="enumeration sizes are the Catalan numbers",
        run=check_catalan,
    ),
    CheckCase(
        id="trees_graft_degree",
        category=CheckCategory.TREES,
        description="grafting adds degrees plus one",
        run=check_graft_degree,
    ),
    CheckCase(
        id="trees_roundtrip",
        category=CheckCategory.TREES,
        description="parse(render(t)) = t",
        run=check_roundtrip,
    ),
    CheckCase(
        id="trees_order",
        category=CheckCategory.TREES,
        description="canonical order is strict and total",
        run=check_canonical_order,
    ),
]
