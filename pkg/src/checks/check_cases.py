"""
src/checks/check_cases.py

Registry of every invariant check, grouped into suites.

SUITES:
1. TREES - enumeration counts, grafting, parse/render round trip
2. RELATIONS - the ⊣/⊢ relations and associativity of +
3. ARITHMETIC - sums and products of integers and of trees
4. THEOREM - Tamari order and the interval theorem for t + s
5. GEOMETRY - Tamari codes, Loday points, canopy and section
6. HYPERCUBE - the Tamari polytope is a deformed cube
7. DENDRIFORM - the polynomial algebra on trees
"""

from typing import List, Optional

from .arithmetic_checks import ARITHMETIC_CHECKS, RELATION_CHECKS
from .base import CheckCase, CheckCategory
from .dendriform_checks import DENDRIFORM_CHECKS
from .geometry_checks import GEOMETRY_CHECKS, HYPERCUBE_CHECKS
from .tamari_checks import THEOREM_CHECKS
from .tree_checks import TREE_CHECKS

ALL_SUITE = "all"


def get_all_checks() -> List[CheckCase]:
    """Every check, suite by suite, in a fixed order."""
    return (
        TREE_CHECKS
        + RELATION_CHECKS
        + ARITHMETIC_CHECKS
        + THEOREM_CHECKS
        + GEOMETRY_CHECKS
        + HYPERCUBE_CHECKS
        + DENDRIFORM_CHECKS
    )


def get_checks_by_category(category: CheckCategory) -> List[CheckCase]:
    return [c for c in get_all_checks() if c.category == category]


def get_check_by_id(check_id: str) -> Optional[CheckCase]:
    for check in get_all_checks():
        if check.id == check_id:
            return check
    return None


def suite_names() -> List[str]:
    """Names accepted by `check`: one per category, plus "all"."""
    return [c.value for c in CheckCategory] + [ALL_SUITE]


def get_suite(name: str) -> List[CheckCase]:
    """
    Checks of a named suite.

    Raises:
        ValueError: unknown suite name
    """
    if name == ALL_SUITE:
        return get_all_checks()
    try:
        return get_checks_by_category(CheckCategory(name))
    except ValueError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}") from None
