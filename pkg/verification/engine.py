"""
Verification engine - runs named invariant suites and collects a report
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

from src.dispersive.errors import SuiteFailure, TalbotError

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    metrics: Dict[str, float] = field(default_factory=dict)
    message: str = ""
    seconds: float = 0.0


SuiteFn = Callable[[int, bool], SuiteResult]

SUITES: Dict[str, SuiteFn] = {}


def register(name: str):
    def wrap(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return wrap


def suite_names() -> List[str]:
    return list(SUITES)


def run_suite(name: str, seed: int = 0, quick: bool = True) -> SuiteResult:
    """Run one suite; computation errors become a failed result, not an exception."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite '{name}'") from None
    started = time.perf_counter()
    try:
        result = fn(seed, quick)
    except (TalbotError, AssertionError) as exc:
        result = SuiteResult(name, False, message=str(exc))
    result.seconds = time.perf_counter() - started
    level = logging.INFO if result.passed else logging.WARNING
    logger.log(level, "suite %s: %s %s (%.2fs)", name, "PASS" if result.passed else "FAIL", result.message, result.seconds)
    return result


def run(names: Optional[Iterable[str]] = None, seed: int = 0, quick: bool = True) -> List[SuiteResult]:
    """Run the given suites ('all' or None means every registered suite)."""
    names = suite_names() if names is None else list(names)
    if names == ["all"]:
        names = suite_names()
    return [run_suite(n, seed, quick) for n in names]


def report_frame(results: List[SuiteResult]) -> pd.DataFrame:
    rows = []
    for r in results:
        row = {"suite": r.name, "passed": r.passed, "seconds": round(r.seconds, 3), "message": r.message}
        row.update({f"metric.{k}": v for k, v in r.metrics.items()})
        rows.append(row)
    return pd.DataFrame(rows)


def require(results: List[SuiteResult]) -> None:
    failed = [r for r in results if not r.passed]
    if failed:
        names = ", ".join(f"{r.name} ({r.message})" for r in failed)
        raise SuiteFailure(f"{len(failed)} suite(s) failed: {names}")
