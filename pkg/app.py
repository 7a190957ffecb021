"""
Talbot Terminal - Main FastAPI Application
Exact rational-time solver, Fourier partial sums, ringing profiles and
invariant suites for periodic dispersive equations
"""

import logging
from datetime import datetime

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api import approx, ringing, solver, verify
from ringing import make_profile
from src.dispersive.errors import InvalidInputError, ProfileTableError, QuadratureError, TalbotError
from src.dispersive.settings import configure_logging
from verification.engine import suite_names

logger = logging.getLogger("app")

app = FastAPI(
    title="Talbot Terminal API",
    description="Periodic dispersive PDE solver and ringing-profile toolkit",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(solver.router)
app.include_router(ringing.router)
app.include_router(approx.router)
app.include_router(verify.router)

# Default profile per parity, the two shapes every other order interpolates
PROFILES = {
    "even_n2": make_profile(2),
    "odd_n3": make_profile(3),
}


@app.exception_handler(InvalidInputError)
async def invalid_input(request: Request, exc: InvalidInputError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(QuadratureError)
@app.exception_handler(ProfileTableError)
async def quadrature_failed(request: Request, exc: TalbotError):
    logger.warning("%s %s: %s", request.method, request.url.path, exc)
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def bad_value(request: Request, exc: ValueError):
    # pydantic models built inside handlers (ProblemConfig, DiophantineParams)
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "name": "Talbot Terminal API",
        "version": app.version,
        "status": "operational",
        "profiles": len(PROFILES),
        "suites": len(suite_names()),
    }


@app.get("/api/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "services": {
            "solver": "online",
            "ringing": "online",
            "verify": "online",
        },
    }


@app.get("/api/profiles/{profile_id}")
async def get_profile(profile_id: str):
    """Metadata of one of the default profiles"""
    if profile_id not in PROFILES:
        raise HTTPException(status_code=404, detail="Profile not found")
    return {"id": profile_id, **PROFILES[profile_id].info()}


@app.on_event("startup")
async def startup_event():
    configure_logging()
    logger.info("Talbot Terminal backend starting")
    logger.info("loaded %d default profiles, %d verify suites", len(PROFILES), len(suite_names()))
    logger.info("API docs at /docs")


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
