# === core/spectral.py ===
"""Discrete Fourier transform backend.

Unnormalized forward transform, ``1/N`` inverse. Arbitrary lengths, prime
included, are handled by scipy's pocketfft in O(N log N).
"""
from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np
import scipy.fft as sfft

import config
from core.errors import ParameterError

log = logging.getLogger(__name__)


def _as_complex(x, axes: Sequence[int]) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 0:
        raise ParameterError("transform input must be at least 1-D")
    for axis in axes:
        if x.shape[axis] == 0:
            raise ParameterError("transform input is empty")
    if not np.all(np.isfinite(x)):
        raise ParameterError("transform input contains NaN or Inf")
    return x


def dft(x, n: Optional[int] = None, axis: int = -1) -> np.ndarray:
    """X_k = sum_n x_n exp(-j 2 pi n k / N) along ``axis``."""
    x = _as_complex(x, (axis,))
    return sfft.fft(x, n=n, axis=axis, workers=config.FFT_WORKERS)


def idft(X, n: Optional[int] = None, axis: int = -1) -> np.ndarray:
    """x_n = (1/N) sum_k X_k exp(+j 2 pi n k / N) along ``axis``."""
    X = _as_complex(X, (axis,))
    return sfft.ifft(X, n=n, axis=axis, workers=config.FFT_WORKERS)


def dftn(x, axes: Optional[Sequence[int]] = None) -> np.ndarray:
    x = np.asarray(x)
    axes = tuple(range(x.ndim)) if axes is None else tuple(axes)
    x = _as_complex(x, axes)
    return sfft.fftn(x, axes=axes, workers=config.FFT_WORKERS)


def idftn(X, axes: Optional[Sequence[int]] = None) -> np.ndarray:
    X = np.asarray(X)
    axes = tuple(range(X.ndim)) if axes is None else tuple(axes)
    X = _as_complex(X, axes)
    return sfft.ifftn(X, axes=axes, workers=config.FFT_WORKERS)


def next_fast_len(n: int) -> int:
    """Smallest m >= n whose prime factors all lie in {2, 3, 5}."""
    if n < 1:
        raise ParameterError(f"next_fast_len needs n >= 1, got {n}")
    # real=True restricts the search to 5-smooth lengths
    return sfft.next_fast_len(int(n), real=True)
