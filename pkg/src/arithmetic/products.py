"""
src/arithmetic/products.py

Multiplication of trees by substitution.

To compute u × t, write u in terms of 1 (its canonical word) and replace
every 1 by t. On sets, the product is the union over the left factor's
members. Degrees multiply: deg(u × t) = deg(u) * deg(t).

Multiplying by zero on either side gives {.}, like n × 0 = 0 × n = 0.
"""

from dataclasses import dataclass
from itertools import product
from typing import List, Optional

from ..trees import LEAF, Tree, TreeSet, render, trees_of_degree
from .operations import TreeLike, as_treeset, tree_sum
from .words import DendriformWord, decompose, decompositions, evaluate, render_word

_ZERO = TreeSet.singleton(LEAF)


def multiply(s: TreeLike, t: TreeLike) -> TreeSet:
    """
    The product s × t.

    Args:
        s: Left factor; each member is written in copies of 1
        t: Right factor, substituted for every 1

    Returns:
        TreeSet of degree deg(s) * deg(t)
    """
    s, t = as_treeset(s), as_treeset(t)
    degree = s.degree * t.degree
    if degree == 0:
        return _ZERO if not (s.is_empty or t.is_empty) else TreeSet(degree=0)
    found = set()
    for u in s:
        found.update(evaluate(decompose(u), one=t))
    return TreeSet.of(found, degree=degree)


@dataclass
class RightDistributivityWitness:
    """Trees t, r, s with t × (r + s) ≠ t × r + t × s."""
    t: Tree
    r: Tree
    s: Tree
    product_of_sum: TreeSet
    sum_of_products: TreeSet

    def describe(self) -> str:
        return (
            f"t={render(self.t)} r={render(self.r)} s={render(self.s)}: "
            f"t×(r+s) has {len(self.product_of_sum)} trees, "
            f"t×r + t×s has {len(self.sum_of_products)}"
        )


def find_right_distributivity_witness(max_degree: int = 2) -> Optional[RightDistributivityWitness]:
    """
    Search trees of degree 1..max_degree, in canonical order, for a failure
    of right distributivity. Returns None if there is none in range.
    """
    candidates = [u for d in range(1, max_degree + 1) for u in trees_of_degree(d)]
    for t, r, s in product(candidates, repeat=3):
        lhs = multiply(t, tree_sum(r, s))
        rhs = tree_sum(multiply(t, r), multiply(t, s))
        if lhs != rhs:
            return RightDistributivityWitness(t, r, s, lhs, rhs)
    return None


@dataclass
class DecompositionMismatch:
    """An alternative word for u that multiplies differently from the canonical one."""
    tree: Tree
    word: DendriformWord
    factor: TreeSet
    expected: TreeSet
    actual: TreeSet

    def describe(self) -> str:
        return (
            f"{render(self.tree)} written as {render_word(self.word)} times "
            f"{self.factor} gives {self.actual}, canonical word gives {self.expected}"
        )


def decomposition_mismatches(max_degree: int = 3, factor_degree: int = 2) -> List[DecompositionMismatch]:
    """
    Multiply every tree of degree 1..max_degree through every one of its
    words, against every single tree of degree 1..factor_degree, and collect
    the cases that disagree with multiply().
    """
    factors = [TreeSet.singleton(v) for d in range(1, factor_degree + 1) for v in trees_of_degree(d)]
    mismatches = []
    for d in range(1, max_degree + 1):
        for u in trees_of_degree(d):
            for word in decompositions(u):
                for factor in factors:
                    expected = multiply(u, factor)
                    actual = evaluate(word, one=factor)
                    if actual != expected:
                        mismatches.append(DecompositionMismatch(u, word, factor, expected, actual))
    return mismatches
