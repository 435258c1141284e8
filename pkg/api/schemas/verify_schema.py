# === api/schemas/verify_schema.py ===
from pydantic import BaseModel, Field
from typing import Dict, List, Optional

import config
from cli.verify import CaseResult


class VerifyRequest(BaseModel):
    suite: str = "all"
    seed: int = Field(default=config.DEFAULT_SEED, ge=0)
    cases: int = Field(default=10, ge=1, le=500)
    perturb: bool = False


class VerifyResponse(BaseModel):
    seed: int
    passed: bool
    counts: Dict[str, List[int]]
    first_failure: Optional[CaseResult] = None
