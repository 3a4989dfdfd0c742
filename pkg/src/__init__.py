"""
src/__init__.py

Root package for the tree arithmetic library.

This makes 'src' a Python package, allowing imports like:
    from src.trees import parse, enumerate_trees
    from src.arithmetic import tree_sum, multiply
"""

__version__ = "0.2.0"
