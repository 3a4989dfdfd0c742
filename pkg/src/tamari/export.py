"""
src/tamari/export.py

Text renderings of a Hasse diagram: Graphviz DOT and JSON.
"""

import json

from ..trees import render
from .poset import HasseDiagram


def to_dot(h: HasseDiagram) -> str:
    """
    DOT digraph of the covering relation, edges oriented lower -> upper.

    Vertices are named n<i> by canonical index and labeled with the tree
    text, so the output is the same on every run.
    """
    lines = [f"digraph tamari_{h.degree} {{"]
    for i, t in enumerate(h.vertices):
        lines.append(f'  n{i} [label="{render(t)}"];')
    for i, j in h.edge_index_pairs():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(h: HasseDiagram) -> str:
    return json.dumps(h.to_dict(), indent=2)
