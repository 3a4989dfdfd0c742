"""
src/tamari/__init__.py

Package exports for the Tamari poset.
"""

from .poset import (
    HasseDiagram,
    covers,
    hasse,
    interval,
    leq,
    over,
    rotations,
    under,
)
from .export import to_dot, to_json

__all__ = [
    "HasseDiagram",
    "covers",
    "hasse",
    "interval",
    "leq",
    "over",
    "rotations",
    "to_dot",
    "to_json",
    "under",
]
