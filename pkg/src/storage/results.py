"""
src/storage/results.py

Saving and loading check reports.

STORAGE DESIGN:
- Each run of a suite is saved as one JSON file named after the suite
- No timestamps in names or content: the same run gives the same bytes
- A later run of the same suite replaces the earlier file

DIRECTORY STRUCTURE:
data/
└── reports/
    ├── check_all.json
    ├── check_theorem.json
    └── ...
"""

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """
    Result of running a single check.

    Attributes:
        check_id: Id of the CheckCase
        category: Suite of the check
        passed: True when every examined case held
        examined: Number of cases examined
        detail: One-line summary (first failure when failed)
        failures: First few failure messages
        error: Library error that stopped the check, if any
    """
    check_id: str
    category: str
    passed: bool
    examined: int
    detail: str = ""
    failures: List[str] = field(default_factory=list)
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(**data)


@dataclass
class CheckRun:
    """All check results of one suite run, plus the parameters used."""
    suite: str
    max_degree: int
    seed: int
    results: List[CheckResult]
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "seed": self.seed,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckRun":
        return cls(
            suite=data["suite"],
            max_degree=data["max_degree"],
            seed=data.get("seed", 0),
            results=[CheckResult.from_dict(r) for r in data.get("results", [])],
            metadata=data.get("metadata", {}),
        )

    def get_results_by_category(self, category: str) -> List[CheckResult]:
        return [r for r in self.results if r.category == category]

    def calculate_summary(self) -> Dict[str, Any]:
        """Pass counts overall and per category (categories in run order)."""
        summary = {
            "suite": self.suite,
            "total": len(self.results),
            "passed": sum(1 for r in self.results if r.passed),
            "by_category": {},
        }
        for result in self.results:
            entry = summary["by_category"].setdefault(
                result.category, {"count": 0, "passed": 0, "examined": 0}
            )
            entry["count"] += 1
            entry["passed"] += int(result.passed)
            entry["examined"] += result.examined
        return summary


class ReportStorage:
    """
    Saves and loads check runs.

    Usage:
        storage = ReportStorage("./data")
        path = storage.save_run(run)
        again = storage.load_run("theorem")
    """

    def __init__(self, data_dir: str = "./data"):
        self.data_dir = Path(data_dir)
        self.reports_dir = self.data_dir / "reports"
        self.reports_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, suite: str) -> Path:
        return self.reports_dir / f"check_{suite}.json"

    def save_run(self, run: CheckRun) -> str:
        """
        Save a check run to disk.

        Returns:
            Path to the saved file
        """
        filepath = self.path_for(run.suite)
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(run.to_dict(), f, indent=2, ensure_ascii=False)
            f.write("\n")
        return str(filepath)

    def load_run(self, suite: str) -> Optional[CheckRun]:
        """The saved run of a suite, or None if there is none."""
        filepath = self.path_for(suite)
        if not filepath.exists():
            return None
        with open(filepath, encoding="utf-8") as f:
            return CheckRun.from_dict(json.load(f))

    def load_all_runs(self) -> List[CheckRun]:
        """Every saved run, sorted by suite name."""
        runs = []
        for filepath in sorted(self.reports_dir.glob("check_*.json")):
            with open(filepath, encoding="utf-8") as f:
                runs.append(CheckRun.from_dict(json.load(f)))
        return runs
