# === core/funcs.py ===
"""Analytic test signals and a boundary taper."""
from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.signal import windows

from core.errors import ParameterError

# below this |sin(pi u / T)| the closed form is replaced by the direct sum
_SINGULARITY_TOL = 1e-9


class DirichletSpec(BaseModel):
    """Period, center and (odd) bandwidth of a Dirichlet kernel."""

    model_config = ConfigDict(frozen=True)

    period: float = Field(gt=0)
    center: float = 0.0
    bandwidth: int = Field(ge=1)

    @field_validator("bandwidth")
    @classmethod
    def _odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError(f"bandwidth must be odd, got {v}")
        return v


def dirichlet(t, spec: DirichletSpec) -> np.ndarray:
    """Sum over k in [-N, N] of exp(j 2 pi k (t - T_c) / T), for any shape of ``t``.

    Evaluated as sin(N_FS pi u / T) / sin(pi u / T) with u = t - T_c; at
    u = 0 (mod T) the value is N_FS.
    """
    t = np.asarray(t, dtype=np.float64)
    u = (t - spec.center) / spec.period
    # reduce to [-1/2, 1/2]; the kernel is 1-periodic in u for odd bandwidth
    u = u - np.rint(u)
    denom = np.sin(np.pi * u)
    near = np.abs(denom) < _SINGULARITY_TOL

    out = np.empty(t.shape, dtype=np.complex128)
    safe = ~near
    out[safe] = np.sin(spec.bandwidth * np.pi * u[safe]) / denom[safe]
    if np.any(near):
        N = (spec.bandwidth - 1) // 2
        k = np.arange(-N, N + 1)
        out[near] = np.exp(1j * 2 * np.pi * np.multiply.outer(u[near], k)).sum(axis=-1)
    return out


def dirichlet_2d(x, y, spec_x: DirichletSpec, spec_y: DirichletSpec) -> np.ndarray:
    """Outer product of 1-D kernels: rows follow ``x``, columns follow ``y``."""
    return np.multiply.outer(dirichlet(x, spec_x), dirichlet(y, spec_y))


def dirichlet_nd(points: Sequence[np.ndarray], specs: Sequence[DirichletSpec]) -> np.ndarray:
    """Separable kernel on the tensor grid of per-axis ``points``."""
    if len(points) != len(specs):
        raise ParameterError(f"got {len(points)} axes of points for {len(specs)} specs")
    out = np.ones((), dtype=np.complex128)
    for t, spec in zip(points, specs):
        out = np.multiply.outer(out, dirichlet(t, spec))
    return out


def apply_taper(x, taper_fraction: float, axis: int = -1) -> np.ndarray:
    """Multiply natural-order samples by a Tukey window along ``axis``.

    ``taper_fraction`` 0 leaves the input unchanged, 1 is a full cosine (Hann)
    window. Any positive fraction zeroes both endpoints.
    """
    if not 0.0 <= taper_fraction <= 1.0:
        raise ParameterError(f"taper fraction must lie in [0, 1], got {taper_fraction}")
    x = np.asarray(x)
    if x.ndim == 0:
        raise ParameterError("taper input must be at least 1-D")
    n = x.shape[axis]
    w = windows.tukey(n, alpha=taper_fraction, sym=True)
    shape = [1] * x.ndim
    shape[axis] = n
    return x * w.reshape(shape)
