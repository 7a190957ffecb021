from fastapi import APIRouter, HTTPException

from api.schemas import VerifyResponse
from verification import suites  # noqa: F401  (registers the suites)
from verification.engine import run_suite, suite_names

router = APIRouter(prefix="/api/verify", tags=["verify"])


@router.get("")
def list_suites():
    return {"suites": suite_names(), "total": len(suite_names())}


@router.post("/{suite}", response_model=VerifyResponse)
def verify(suite: str, seed: int = 0, full: bool = False):
    """Run one invariant suite in quick mode unless full=true"""
    if suite not in suite_names():
        raise HTTPException(status_code=404, detail=f"unknown suite '{suite}'")
    r = run_suite(suite, seed, quick=not full)
    return VerifyResponse(
        suite=r.name,
        passed=r.passed,
        metrics={k: float(v) for k, v in r.metrics.items()},
        message=r.message,
        seconds=r.seconds,
    )
