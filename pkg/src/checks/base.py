"""
src/checks/base.py

Types shared by the invariant check suites.

A check is a named, deterministic function of a CheckContext that examines
a family of cases and returns a CheckOutcome. Failing cases are collected,
never raised, so that one bad tree does not hide the others.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional

import numpy as np

from ..config import Settings, get_settings
from ..trees import Tree, render

# Failure messages kept per check; the count of failures is always exact.
MAX_REPORTED_FAILURES = 5


class CheckCategory(Enum):
    """Suites of checks, one per `check` subcommand argument."""
    TREES = "trees"
    RELATIONS = "relations"
    ARITHMETIC = "arithmetic"
    THEOREM = "theorem"
    GEOMETRY = "geometry"
    HYPERCUBE = "hypercube"
    DENDRIFORM = "dendriform"


@dataclass(frozen=True)
class CheckContext:
    """
    Parameters of a check run.

    Attributes:
        max_degree: Largest total degree examined exhaustively
        seed: Seed for every random sample
        relation_samples: Random triples for the relations check
        dendriform_samples: Random combinations for the dendriform check
    """
    max_degree: int = 6
    seed: int = 0
    relation_samples: int = 200
    dendriform_samples: int = 100

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, max_degree: Optional[int] = None) -> "CheckContext":
        settings = settings or get_settings()
        return cls(
            max_degree=settings.check_degree if max_degree is None else max_degree,
            seed=settings.seed,
            relation_samples=settings.relation_samples,
            dendriform_samples=settings.dendriform_samples,
        )

    def rng(self) -> np.random.Generator:
        """A fresh generator, so every check sees the same stream for a seed."""
        return np.random.default_rng(self.seed)

    def pick(self, rng: np.random.Generator, pool: List[Tree]) -> Tree:
        return pool[int(rng.integers(len(pool)))]


@dataclass
class CheckOutcome:
    """Result of running one check."""
    passed: bool
    examined: int
    detail: str = ""
    failures: List[str] = field(default_factory=list)


class Tally:
    """Counts examined cases and records failures for a CheckOutcome."""

    def __init__(self):
        self.examined = 0
        self.failed = 0
        self.failures: List[str] = []

    def expect(self, condition: bool, message: Callable[[], str]) -> bool:
        """Count one case; on failure record message() (built lazily)."""
        self.examined += 1
        if not condition:
            self.fail(message())
        return condition

    def fail(self, message: str) -> None:
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)

    def outcome(self, detail: str = "") -> CheckOutcome:
        if self.failed:
            detail = f"{self.failed} of {self.examined} cases failed; first: {self.failures[0]}"
        return CheckOutcome(
            passed=self.failed == 0,
            examined=self.examined,
            detail=detail,
            failures=list(self.failures),
        )


@dataclass
class CheckCase:
    """
    A single invariant check.

    Attributes:
        id: Unique identifier (e.g., "relations_exhaustive")
        category: Suite this check belongs to
        description: What property is checked
        run: The check itself
    """
    id: str
    category: CheckCategory
    description: str
    run: Callable[[CheckContext], CheckOutcome]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "category": self.category.value,
            "description": self.description,
        }


def show(*trees: Tree) -> str:
    return ", ".join(render(t) for t in trees)
