"""
src/storage/__init__.py

Package exports for storage module.
"""

from .results import CheckResult, CheckRun, ReportStorage

__all__ = [
    "CheckResult",
    "CheckRun",
    "ReportStorage",
]
