from fractions import Fraction

from fastapi import APIRouter, HTTPException

from api.schemas import Arc, SeriesRequest, SeriesResponse, SolveRequest, SolveResponse
from number_theory.diophantine import parse_time
from src.dispersive.classd import ProblemConfig, indicator, l2_norm_sq
from src.dispersive.rational import arc_table, grid_eval, jump_locations, solve_rational
from src.dispersive.series import solution_partial_sum

router = APIRouter(prefix="/api", tags=["solver"])


@router.post("/solve", response_model=SolveResponse)
def solve(req: SolveRequest):
    """Exact piecewise-constant solution for the indicator data at t = u/q"""
    config = ProblemConfig(n=req.n, gamma=req.gamma)
    t = parse_time(req.t)
    if not isinstance(t, Fraction):
        raise HTTPException(status_code=422, detail="solve needs a rational time written as u/q")

    sol = solve_rational(indicator(config.gamma), t, config=config)
    arcs = [Arc(**row) for row in arc_table(sol).to_dict("records")]
    grid = None
    if req.grid_size:
        field = grid_eval(sol, req.grid_size)
        grid = [[float(x), float(v.real), float(v.imag)] for x, v in zip(field.xs, field.values)]
    return SolveResponse(
        t=f"{t.numerator}/{t.denominator}",
        n=config.n,
        arcs=arcs,
        jumps=jump_locations(sol),
        l2_norm_sq=l2_norm_sq(sol.field),
        grid=grid,
    )


@router.post("/series", response_model=SeriesResponse)
def series(req: SeriesRequest):
    """Symmetric Fourier partial sum U_K(t, x) at any real time"""
    config = ProblemConfig(n=req.n, gamma=req.gamma)
    value = solution_partial_sum(indicator(config.gamma), parse_time(req.t), req.x, req.K, config.n)
    return SeriesResponse(t=req.t, x=req.x, K=req.K, re=value.real, im=value.imag)
