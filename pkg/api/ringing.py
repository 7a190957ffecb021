from fastapi import APIRouter, HTTPException

from api.schemas import ProfileRow, RingingRequest, RingingResponse
from ringing import PROFILE_FORMS, make_profile, profile_table

router = APIRouter(prefix="/api", tags=["ringing"])

# Orders exposed on GET /api/profiles; any n >= 2 works on POST /api/ringing
CATALOG_ORDERS = (2, 3, 4, 6, 17)


@router.get("/profiles")
def list_profiles():
    """Available limit profiles with their metadata"""
    profiles = [make_profile(n).info() for n in CATALOG_ORDERS]
    profiles.append(make_profile(3, form="odd-weighted").info())
    return {"profiles": profiles, "forms": sorted(PROFILE_FORMS), "total": len(profiles)}


@router.post("/ringing", response_model=RingingResponse)
def ringing(req: RingingRequest):
    """Tabulate a ringing profile on an evenly spaced s grid"""
    try:
        profile = make_profile(req.n, req.side, req.form)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc.args[0]))
    rows = profile_table(profile, req.s_lo, req.s_hi, req.count)
    return RingingResponse(
        profile=profile.name,
        n=req.n,
        side=req.side,
        rows=[ProfileRow(s=r.s, re=r.value.real, im=r.value.imag, error=r.error) for r in rows],
    )
