"""
src/checks/tamari_checks.py

The Tamari order and the interval theorem: for single trees t and s,

    t + s = { r : t/s ≤ r ≤ t\\s }
"""

from itertools import product

import networkx as nx

from ..arithmetic import tree_sum
from ..tamari import covers, hasse, interval, leq, over, under
from ..trees import TreeSet, left_comb, right_comb, trees_of_degree
from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally, show

# Cover counts that the rotation enumeration must reproduce.
EDGE_COUNTS = {0: 0, 1: 0, 2: 1, 3: 5, 4: 21}


def check_interval_sum(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for a in range(ctx.max_degree + 1):
        for b in range(ctx.max_degree + 1 - a):
            for t, s in product(trees_of_degree(a), trees_of_degree(b)):
                low, high = under(t, s), over(t, s)
                tally.expect(leq(low, high), lambda: f"t/s ≰ t\\s for {show(t, s)}")
                tally.expect(
                    tree_sum(t, s) == interval(low, high),
                    lambda: f"t+s is not [t/s, t\\s] for {show(t, s)}",
                )
    return tally.outcome(f"all pairs of total degree ≤ {ctx.max_degree}")


def check_lattice_bounds(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(ctx.max_degree + 1):
        diagram = hasse(d)
        tally.expect(
            nx.is_directed_acyclic_graph(diagram.graph),
            lambda: f"degree {d}: covering graph has a cycle",
        )
        tally.expect(
            diagram.sources() == [left_comb(d)] and diagram.sinks() == [right_comb(d)],
            lambda: f"degree {d}: extremes are {show(*diagram.sources())} / {show(*diagram.sinks())}",
        )
        for t in diagram.vertices:
            tally.expect(
                leq(left_comb(d), t) and leq(t, right_comb(d)),
                lambda: f"{show(t)} is not between the combs",
            )
    return tally.outcome()


def check_covers(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d, expected in EDGE_COUNTS.items():
        if d <= ctx.max_degree:
            found = len(hasse(d).cover_edges)
            tally.expect(found == expected, lambda: f"degree {d}: {found} covers, expected {expected}")
    for d in range(min(ctx.max_degree, 5) + 1):
        tally.expect(covers(right_comb(d)).is_empty, lambda: f"right comb of degree {d} has covers")
        for a, b in hasse(d).cover_edges:
            tally.expect(
                leq(a, b) and interval(a, b) == TreeSet.of([a, b]),
                lambda: f"{show(a, b)} is not a covering pair",
            )
    return tally.outcome()


def check_order_axioms(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for d in range(min(ctx.max_degree, 5) + 1):
        diagram = hasse(d)
        for a in diagram.vertices:
            tally.expect(leq(a, a), lambda: f"{show(a)} ≰ itself")
            for b in diagram.up_set(a):
                if b != a:
                    tally.expect(not leq(b, a), lambda: f"{show(a, b)} are mutually ≤")
                tally.expect(
                    diagram.up_set(b) <= diagram.up_set(a),
                    lambda: f"transitivity fails through {show(a, b)}",
                )
    return tally.outcome()


THEOREM_CHECKS = [
    CheckCase(
        id="theorem_interval_sum",
        category=CheckCategory.THEOREM,
        description="t + s is the interval [t/s, t\\s]",
        run=check_interval_sum,
    ),
    CheckCase(
        id="theorem_lattice_bounds",
        category=CheckCategory.THEOREM,
        description="left comb is the minimum, right comb the maximum",
        run=check_lattice_bounds,
    ),
    CheckCase(
        id="theorem_covers",
        category=CheckCategory.THEOREM,
        description="rotations are exactly the covering pairs",
        run=check_covers,
    ),
    CheckCase(
        id="theorem_order_axioms",
        category=CheckCategory.THEOREM,
        description="the order is reflexive, antisymmetric and transitive",
        run=check_order_axioms,
    ),
]
