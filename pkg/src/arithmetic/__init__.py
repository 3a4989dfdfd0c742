"""
src/arithmetic/__init__.py

Package exports for the arithmetic of trees.
"""

from .operations import (
    ZERO,
    as_treeset,
    embed,
    left_trees,
    op_left,
    op_right,
    project,
    right_trees,
    sum_trees,
    tree_sum,
)
from .words import (
    ONE,
    Connective,
    DendriformWord,
    all_words,
    decompose,
    decompositions,
    distinct_evaluations,
    evaluate,
    parse_word,
    render_word,
    w_left,
    w_right,
)
from .products import (
    DecompositionMismatch,
    RightDistributivityWitness,
    decomposition_mismatches,
    find_right_distributivity_witness,
    multiply,
)

__all__ = [
    "ZERO",
    "ONE",
    "Connective",
    "DendriformWord",
    "DecompositionMismatch",
    "RightDistributivityWitness",
    "all_words",
    "as_treeset",
    "decompose",
    "decomposition_mismatches",
    "decompositions",
    "distinct_evaluations",
    "embed",
    "evaluate",
    "find_right_distributivity_witness",
    "left_trees",
    "multiply",
    "op_left",
    "op_right",
    "parse_word",
    "project",
    "render_word",
    "right_trees",
    "sum_trees",
    "tree_sum",
    "w_left",
    "w_right",
]
