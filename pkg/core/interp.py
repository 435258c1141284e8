# === core/interp.py ===
"""Bandlimited interpolation of FS coefficients.

``fs_interp`` evaluates

    x(t_n) = sum_{k=-N}^{N} X_k exp(j 2 pi k t_n / T),   t_n = a + n (b - a) / (M - 1)

on a closed interval [a, b] with one chirp Z-transform of length M:
x = A^N czt(X) * W^{-N E}, A = exp(-j 2 pi a / T), W = exp(j 2 pi (b - a) / (T (M - 1))).
``fs_interp_zero_pad`` is the full-period baseline: zero-padded inverse FFS.
"""
from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.czt import CztParams, czt
from core.errors import ParameterError
from core.ffs import FsCoefficients, iffsn
from core.grid import PeriodicGrid, from_ffs_order

log = logging.getLogger(__name__)


class InterpRequest(BaseModel):
    """M equi-spaced samples on the closed interval [a, b]."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    M: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_interval(self) -> "InterpRequest":
        if not self.a < self.b:
            raise ValueError(f"interval start a={self.a} must be < end b={self.b}")
        return self

    @property
    def step(self) -> float:
        return (self.b - self.a) / (self.M - 1)


def interp_points(req: InterpRequest) -> np.ndarray:
    return req.a + req.step * np.arange(req.M)


def _half_bandwidth(N_FS: int) -> int:
    if N_FS % 2 == 0:
        raise ParameterError(f"bandwidth must be odd, got {N_FS}")
    return (N_FS - 1) // 2


def fs_interp(X, T: float, req: InterpRequest, axis: int = -1) -> np.ndarray:
    """Interpolate trimmed FS coefficients (ascending k) along ``axis``."""
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim == 0:
        raise ParameterError("coefficients must be at least 1-D")
    if T <= 0:
        raise ParameterError(f"period must be positive, got {T}")
    N = _half_bandwidth(X.shape[axis])

    A = np.exp(-1j * 2 * np.pi * req.a / T)
    W = np.exp(1j * 2 * np.pi * req.step / T)
    y = czt(X, CztParams(A=A, W=W, M=req.M), axis=axis)

    E = np.arange(req.M)
    correction = np.exp(-1j * 2 * np.pi * N * (req.a + req.step * E) / T)
    shape = [1] * y.ndim
    shape[axis] = req.M
    return y * correction.reshape(shape)


def fs_interpn(X, T: Sequence[float], reqs: Sequence[InterpRequest]) -> np.ndarray:
    """Per-axis :func:`fs_interp` over every axis of ``X``."""
    X = np.asarray(X, dtype=np.complex128)
    if not len(T) == len(reqs) == X.ndim:
        raise ParameterError(
            f"need one period and one request per axis: got {len(T)} periods, "
            f"{len(reqs)} requests for a {X.ndim}-D input"
        )
    for axis, (period, req) in enumerate(zip(T, reqs)):
        X = fs_interp(X, period, req, axis=axis)
    return X


def fs_interpn_zero_pad(
    X,
    T: Sequence[float],
    N_target: Sequence[int],
    T_c: Optional[Sequence[float]] = None,
) -> np.ndarray:
    """Full-period synthesis at N_target points per axis, natural order.

    The output points are ``natural_sample_points`` of the grid with
    N_s = N_target. With odd bandwidths Q = N_target - N_FS always has the
    parity the sampling theorems require, so no extra point is needed.
    """
    X = np.asarray(X, dtype=np.complex128)
    T_c = [0.0] * X.ndim if T_c is None else list(T_c)
    if not len(T) == len(N_target) == len(T_c) == X.ndim:
        raise ParameterError("need one period, target size and center per axis")
    for N_FS, n in zip(X.shape, N_target):
        _half_bandwidth(N_FS)
        if n < N_FS:
            raise ParameterError(f"N_target={n} is below the bandwidth {N_FS}")
    grid = PeriodicGrid.from_lists(list(T), T_c, list(X.shape), list(N_target))
    samples = iffsn(FsCoefficients.from_trimmed(X, grid))
    return from_ffs_order(samples, grid).values


def fs_interp_zero_pad(X, T: float, N_target: int, T_c: float = 0.0) -> np.ndarray:
    """1-D zero-pad baseline: one full period at N_target uniform points."""
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim != 1:
        raise ParameterError("fs_interp_zero_pad expects a 1-D coefficient vector")
    return fs_interpn_zero_pad(X, [T], [N_target], [T_c])
