from fastapi import APIRouter

from api.schemas import ApproxRequest, ApproxResponse
from number_theory.diophantine import DiophantineParams, find_approximant, in_set_A_m, in_set_B, parse_time

router = APIRouter(prefix="/api", tags=["diophantine"])


@router.post("/approx", response_model=ApproxResponse)
def approx(req: ApproxRequest):
    """Approximant at scale M and finite-horizon membership of the exceptional sets"""
    params = DiophantineParams(n=req.n, delta=req.delta, alpha=req.alpha, m=req.m)
    t = parse_time(req.t)
    frac = find_approximant(t, req.M, params) if req.M is not None else None
    in_b = in_set_B(t, params, req.M_max) if 0 < t < 1 else None
    return ApproxResponse(
        t=req.t,
        approximant=str(frac) if frac is not None else None,
        in_A_m=in_set_A_m(t, params, req.M_max),
        in_B=in_b,
        alpha=params.effective_alpha,
    )
