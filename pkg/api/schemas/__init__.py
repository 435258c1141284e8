# === api/schemas/__init__.py ===
from .transform_schema import (
    ComplexArray,
    CoefficientsResponse,
    ConvolveApiRequest,
    FfsRequest,
    GridSpec,
    IffsRequest,
    InterpApiRequest,
    Interval,
    SamplesResponse,
)
from .verify_schema import VerifyRequest, VerifyResponse

__all__ = [
    "ComplexArray", "GridSpec", "Interval",
    "FfsRequest", "IffsRequest", "InterpApiRequest", "ConvolveApiRequest",
    "CoefficientsResponse", "SamplesResponse",
    "VerifyRequest", "VerifyResponse",
]
