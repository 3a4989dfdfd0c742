"""
src/dendriform/__init__.py

The dendriform polynomial algebra on trees.
"""

from .polynomial import (
    ONE,
    X,
    ZERO,
    Polynomial,
    add,
    compose,
    mul,
    poly_of_int,
    prec,
    render_polynomial,
    scale,
    succ,
)

__all__ = [
    "ONE",
    "X",
    "ZERO",
    "Polynomial",
    "add",
    "compose",
    "mul",
    "poly_of_int",
    "prec",
    "render_polynomial",
    "scale",
    "succ",
]
