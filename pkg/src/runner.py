"""
src/runner.py

The check runner that orchestrates the invariant suites.

This module:
1. Picks the checks of a suite
2. Runs each one with a shared CheckContext
3. Collects results (a library error fails its check; only a cap hit aborts the run)
4. Optionally saves the run
5. Formats the pass/fail report

Progress goes to stderr through tqdm so that the report on stdout is
byte-identical between runs.
"""

import sys
from typing import List, Optional

from tqdm import tqdm

from .checks import CheckCase, CheckContext, get_suite
from .errors import ArborError, CapExceededError
from .storage import CheckResult, CheckRun, ReportStorage

RULE = "=" * 60


class CheckRunner:
    """
    Runs check suites.

    Usage:
        runner = CheckRunner(CheckContext(max_degree=5))
        run = runner.run_suite("theorem")
        print(format_report(run))
    """

    def __init__(
        self,
        context: Optional[CheckContext] = None,
        data_dir: str = "./data",
        verbose: bool = False,
    ):
        """
        Initialize the runner.

        Args:
            context: Check parameters; defaults come from the settings
            data_dir: Directory for saved reports
            verbose: Whether to show progress on stderr
        """
        self.context = context or CheckContext.from_settings()
        self.data_dir = data_dir
        self.verbose = verbose

    def run_single_check(self, check: CheckCase) -> CheckResult:
        try:
            outcome = check.run(self.context)
        except CapExceededError:
            raise
        except ArborError as e:
            return CheckResult(
                check_id=check.id,
                category=check.category.value,
                passed=False,
                examined=0,
                detail=f"error: {e}",
                error=f"{type(e).__name__}: {e}",
            )
        return CheckResult(
            check_id=check.id,
            category=check.category.value,
            passed=outcome.passed,
            examined=outcome.examined,
            detail=outcome.detail,
            failures=outcome.failures,
        )

    def run_checks(self, suite: str, checks: List[CheckCase], save: bool = False) -> CheckRun:
        if self.verbose:
            tqdm.write(RULE, file=sys.stderr)
            tqdm.write(f"Suite: {suite}  checks: {len(checks)}  max degree: {self.context.max_degree}", file=sys.stderr)
            tqdm.write(RULE, file=sys.stderr)

        results: List[CheckResult] = []
        pbar = tqdm(total=len(checks), desc=f"check {suite}", file=sys.stderr, disable=not self.verbose)
        try:
            for check in checks:
                pbar.set_postfix({"check": check.id[:30]})
                result = self.run_single_check(check)
                results.append(result)
                if self.verbose and not result.passed:
                    tqdm.write(f"FAIL {check.id}: {result.detail}", file=sys.stderr)
                pbar.update(1)
        finally:
            pbar.close()

        run = CheckRun(
            suite=suite,
            max_degree=self.context.max_degree,
            seed=self.context.seed,
            results=results,
            metadata={
                "relation_samples": self.context.relation_samples,
                "dendriform_samples": self.context.dendriform_samples,
            },
        )
        if save:
            filepath = ReportStorage(self.data_dir).save_run(run)
            if self.verbose:
                tqdm.write(f"Report saved to: {filepath}", file=sys.stderr)
        return run

    def run_suite(self, suite: str, save: bool = False) -> CheckRun:
        """
        Run every check of a named suite ("all" for everything).

        Raises:
            ValueError: unknown suite name
        """
        return self.run_checks(suite, get_suite(suite), save=save)


def format_report(run: CheckRun) -> str:
    """The pass/fail report printed by `main.py check`."""
    lines = [
        RULE,
        f"CHECK SUITE: {run.suite} (max degree {run.max_degree}, seed {run.seed})",
        RULE,
    ]
    for result in run.results:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status}  {result.check_id}  [{result.examined} cases]"
        if result.detail:
            line += f"  {result.detail}"
        lines.append(line)
        if not result.passed:
            lines.extend(f"      - {failure}" for failure in result.failures[1:])

    summary = run.calculate_summary()
    lines += ["", RULE, " RESULTS SUMMARY", RULE]
    for category, stats in summary["by_category"].items():
        lines.append(
            f"  {category}: {stats['passed']}/{stats['count']} passed ({stats['examined']} cases)"
        )
    verdict = "PASS" if run.passed else "FAIL"
    lines.append(f"\nOverall: {verdict} ({summary['passed']}/{summary['total']} checks)")
    return "\n".join(lines) + "\n"
