# === api/schemas/transform_schema.py ===
from pydantic import BaseModel, Field, model_validator
from typing import List, Optional
import numpy as np

from core.convolve import ScaleMode
from core.grid import PeriodicGrid, SampleOrder


class ComplexArray(BaseModel):
    """Complex tensor as a shape plus flat row-major real and imaginary parts."""
    shape: List[int] = Field(min_length=1)
    real: List[float]
    imag: List[float]

    @model_validator(mode="after")
    def _check_size(self) -> "ComplexArray":
        size = int(np.prod(self.shape))
        if len(self.real) != size or len(self.imag) != size:
            raise ValueError(
                f"shape {self.shape} needs {size} values, got {len(self.real)} real and {len(self.imag)} imag"
            )
        return self

    def to_numpy(self) -> np.ndarray:
        values = np.asarray(self.real) + 1j * np.asarray(self.imag)
        return values.reshape(self.shape)

    @classmethod
    def from_numpy(cls, values) -> "ComplexArray":
        values = np.asarray(values, dtype=np.complex128)
        return cls(
            shape=list(values.shape),
            real=values.real.ravel().tolist(),
            imag=values.imag.ravel().tolist(),
        )

    class Config:
        json_schema_extra = {"example": {"shape": [3], "real": [1.0, 1.0, 1.0], "imag": [0.0, 0.0, 0.0]}}


class GridSpec(BaseModel):
    """Per-axis grid parameters; a single entry is broadcast to every axis."""
    period: List[float] = Field(min_length=1)
    center: List[float] = [0.0]
    bandwidth: List[int] = Field(min_length=1)
    sample_count: List[int] = Field(min_length=1)

    def to_grid(self) -> PeriodicGrid:
        return PeriodicGrid.from_lists(self.period, self.center, self.bandwidth, self.sample_count)

    class Config:
        json_schema_extra = {"example": {"period": [1.0], "center": [0.0], "bandwidth": [5], "sample_count": [7]}}


class FfsRequest(BaseModel):
    grid: GridSpec
    samples: ComplexArray
    order: SampleOrder = SampleOrder.natural
    trim: bool = True


class IffsRequest(BaseModel):
    grid: GridSpec
    # trimmed (bandwidth per axis) or padded (sample_count per axis)
    coefficients: ComplexArray
    order: SampleOrder = SampleOrder.ffs


class CoefficientsResponse(BaseModel):
    coefficients: ComplexArray
    trimmed: bool


class Interval(BaseModel):
    a: float
    b: float
    m: int = Field(ge=2)


class InterpApiRequest(BaseModel):
    coefficients: ComplexArray
    periods: List[float] = Field(min_length=1)
    intervals: List[Interval] = Field(min_length=1)


class ConvolveApiRequest(BaseModel):
    grid: GridSpec
    f: ComplexArray
    h: ComplexArray
    reorder: bool = True
    scale: ScaleMode = ScaleMode.coefficient_product


class SamplesResponse(BaseModel):
    samples: ComplexArray
    order: SampleOrder
    points: Optional[List[List[float]]] = None
