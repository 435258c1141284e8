# === api/routes/verify.py ===
from fastapi import APIRouter, HTTPException

from api.schemas.verify_schema import VerifyRequest, VerifyResponse
from cli.verify import run_verify
from core.errors import ParameterError

router = APIRouter()


@router.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    """Run the oracle suites and report per-suite pass counts"""
    try:
        report = run_verify([request.suite], seed=request.seed, cases=request.cases, perturb=request.perturb)
    except ParameterError as e:
        raise HTTPException(status_code=400, detail=str(e))

    return VerifyResponse(
        seed=report.seed,
        passed=report.passed,
        counts={name: list(c) for name, c in report.counts().items()},
        first_failure=report.first_failure,
    )
