# === core/czt.py ===
"""Chirp Z-transform via Bluestein's algorithm.

    X_k = sum_{n=0}^{N-1} x_n A^{-n} W^{nk},   k = 0, ..., M-1

Using nk = (n^2 + k^2 - (k - n)^2) / 2 the sum becomes a linear convolution
of the chirped input with the chirp W^{-m^2/2}, evaluated with transforms of
length L = next_fast_len(N + M - 1).
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

import config
from core import spectral
from core.errors import ParameterError

log = logging.getLogger(__name__)


class CztParams(BaseModel):
    """Starting point A, ratio W and output length M of a chirp Z-transform.

    |W| != 1 makes the chirp grow or decay as W^{m^2/2}; large N + M can then
    overflow. This is not guarded.
    """

    model_config = ConfigDict(frozen=True)

    A: complex
    W: complex
    M: int = Field(ge=1)

    @field_validator("A", "W")
    @classmethod
    def _nonzero(cls, v: complex) -> complex:
        if v == 0:
            raise ValueError("A and W must be nonzero")
        return v


def _power(base_log: complex, exponent: np.ndarray) -> np.ndarray:
    # base**exponent from a fixed log(base); no repeated multiplication
    return np.exp(exponent * base_log)


@lru_cache(maxsize=config.CHIRP_CACHE_SIZE)
def _chirps(N: int, params: CztParams) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Input chirp, output chirp and transformed kernel for one (N, A, W, M)."""
    M = params.M
    L = spectral.next_fast_len(N + M - 1)
    log.debug("bluestein N=%d M=%d L=%d", N, M, L)
    log_A, log_W = np.log(params.A), np.log(params.W)

    n = np.arange(N, dtype=np.float64)
    k = np.arange(M, dtype=np.float64)
    pre = _power(-log_A, n) * _power(log_W, n * n / 2)
    post = _power(log_W, k * k / 2)

    kernel = np.zeros(L, dtype=np.complex128)
    kernel[:M] = _power(-log_W, k * k / 2)
    if N > 1:
        m = np.arange(1, N, dtype=np.float64)
        kernel[L - N + 1 :] = _power(-log_W, m * m / 2)[::-1]
    kernel_f = spectral.dft(kernel)

    for v in (pre, post, kernel_f):
        v.setflags(write=False)
    return pre, post, kernel_f


def czt(x, params: CztParams, axis: int = -1) -> np.ndarray:
    """Length-M chirp Z-transform of ``x`` along ``axis``."""
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 0 or x.shape[axis] == 0:
        raise ParameterError("czt input must have at least one sample along the transform axis")
    N = x.shape[axis]
    pre, post, kernel_f = _chirps(N, params)
    L = kernel_f.size

    x = np.moveaxis(x, axis, -1)
    y = spectral.idft(spectral.dft(x * pre, n=L) * kernel_f)
    y = y[..., : params.M] * post
    return np.moveaxis(y, -1, axis)


def cztn(x, params: Sequence[CztParams], axes: Optional[Sequence[int]] = None) -> np.ndarray:
    """Chirp Z-transform along several axes, one :class:`CztParams` per axis."""
    x = np.asarray(x, dtype=np.complex128)
    axes = tuple(range(x.ndim)) if axes is None else tuple(axes)
    if len(params) != len(axes):
        raise ParameterError(f"got {len(params)} parameter sets for {len(axes)} axes")
    if any(not -x.ndim <= a < x.ndim for a in axes):
        raise ParameterError(f"axes {axes} out of range for a {x.ndim}-D input")
    for p, axis in zip(params, axes):
        x = czt(x, p, axis=axis)
    return x
