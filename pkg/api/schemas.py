from typing import List, Optional

from pydantic import BaseModel, Field


class SolveRequest(BaseModel):
    n: int = 2
    gamma: float = 0.31830988618379067
    t: str = Field(..., description="rational time u/q")
    grid_size: int = Field(0, ge=0, le=1 << 16)


class Arc(BaseModel):
    start: float
    end: float
    re: float
    im: float


class SolveResponse(BaseModel):
    t: str
    n: int
    arcs: List[Arc]
    jumps: List[float]
    l2_norm_sq: float
    grid: Optional[List[List[float]]] = None


class SeriesRequest(BaseModel):
    n: int = 2
    gamma: float = 0.31830988618379067
    t: str
    x: float = 0.0
    K: int = Field(10_000, ge=0, le=1_000_000)


class SeriesResponse(BaseModel):
    t: str
    x: float
    K: int
    re: float
    im: float


class RingingRequest(BaseModel):
    n: int = 2
    side: int = 1
    s_lo: float = -6.0
    s_hi: float = 6.0
    count: int = Field(61, ge=2, le=2001)
    form: str = "auto"


class ProfileRow(BaseModel):
    s: float
    re: float
    im: float
    error: float


class RingingResponse(BaseModel):
    profile: str
    n: int
    side: int
    rows: List[ProfileRow]


class ApproxRequest(BaseModel):
    t: str
    n: int = 2
    delta: float = 0.4
    alpha: Optional[float] = None
    m: int = 2
    M: Optional[float] = None
    M_max: float = Field(1000.0, le=1e5)


class ApproxResponse(BaseModel):
    t: str
    approximant: Optional[str] = None
    in_A_m: bool
    in_B: Optional[bool] = None
    alpha: float


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    metrics: dict
    message: str
    seconds: float
