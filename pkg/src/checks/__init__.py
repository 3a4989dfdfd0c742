"""
src/checks/__init__.py

Invariant check suites run by `main.py check`.
"""

from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally
from .check_cases import get_all_checks, get_check_by_id, get_checks_by_category, get_suite, suite_names

__all__ = [
    "CheckCase",
    "CheckCategory",
    "CheckContext",
    "CheckOutcome",
    "Tally",
    "get_all_checks",
    "get_check_by_id",
    "get_checks_by_category",
    "get_suite",
    "suite_names",
]
