"""
src/trees/__init__.py

Package exports for planar binary trees.
"""

from .tree import (
    LEAF,
    Tree,
    catalan,
    compare,
    graft,
    iter_leaves,
    left_comb,
    render,
    right_comb,
    trees_of_degree,
)
from .parser import parse
from .treeset import TreeSet, enumerate_trees

__all__ = [
    "LEAF",
    "Tree",
    "TreeSet",
    "catalan",
    "compare",
    "enumerate_trees",
    "graft",
    "iter_leaves",
    "left_comb",
    "parse",
    "render",
    "right_comb",
    "trees_of_degree",
]
