# === core/ffs.py ===
"""Fast Fourier series analysis and synthesis.

For a T-periodic function of odd bandwidth N_FS = 2N + 1 sampled at the
``sample_points`` of a grid (ffs order):

    x   = N_s * idft(X_FS * B1**E1) * B2**(N*E2)
    X_FS = dft(x * B2**(-N*E2)) / N_s * B1**(-E1)

with B2 = exp(-j 2 pi / N_s), E1 = [-N, ..., N, 0_Q], E2 = ffs_index, and
B1 = exp(j 2 pi T_c / T) (odd N_s) or exp(j (2 pi / T) (T_c + T / (2 N_s)))
(even N_s). Coefficients are returned as [X_-N, ..., X_N, 0_Q] per axis.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

import config
from core import spectral
from core.errors import ParameterError
from core.grid import DimSpec, PeriodicGrid, SampleOrder, SampleTensor, ffs_index

log = logging.getLogger(__name__)


class FsCoefficients(BaseModel):
    """FS coefficients of a grid, zero-padded to N_s per axis."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: PeriodicGrid
    coeffs: np.ndarray

    @field_validator("coeffs", mode="before")
    @classmethod
    def _as_array(cls, v):
        return np.asarray(v, dtype=np.complex128)

    @model_validator(mode="after")
    def _check_shape(self) -> "FsCoefficients":
        if self.coeffs.shape != self.grid.shape:
            raise ValueError(
                f"coefficient shape {self.coeffs.shape} does not match grid shape {self.grid.shape}"
            )
        return self

    @classmethod
    def from_trimmed(cls, values, grid: PeriodicGrid) -> "FsCoefficients":
        """Pad N_FS-long coefficient blocks with Q zeros per axis."""
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != grid.bandwidths:
            raise ParameterError(
                f"trimmed coefficients have shape {values.shape}, expected {grid.bandwidths}"
            )
        padded = np.zeros(grid.shape, dtype=np.complex128)
        padded[_bandlimited_block(grid)] = values
        return cls(grid=grid, coeffs=padded)

    def trim(self) -> np.ndarray:
        """The [X_-N, ..., X_N] block per axis, without padding."""
        return self.coeffs[_bandlimited_block(self.grid)]


def _bandlimited_block(grid: PeriodicGrid) -> Tuple[slice, ...]:
    return tuple(slice(0, d.bandwidth) for d in grid.dims)


@lru_cache(maxsize=config.MODULATION_CACHE_SIZE)
def _modulation(dim: DimSpec) -> Tuple[np.ndarray, np.ndarray]:
    """B1**E1 and B2**(N*E2) for one axis."""
    log.debug("computing modulation vectors for %s", dim)
    N, N_s = dim.half_bandwidth, dim.sample_count

    E1 = np.zeros(N_s)
    E1[: dim.bandwidth] = np.arange(-N, N + 1)
    shift = dim.center + dim.period / (2 * N_s) if dim.is_even else dim.center
    mod_1 = np.exp(1j * 2 * np.pi * (shift / dim.period) * E1)

    # exponent reduced mod N_s in integers before the phase is formed
    E2 = (N * ffs_index(dim)) % N_s
    mod_2 = np.exp(-1j * 2 * np.pi * E2 / N_s)

    mod_1.setflags(write=False)
    mod_2.setflags(write=False)
    return mod_1, mod_2


def _along(vector: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = vector.size
    return vector.reshape(shape)


def _check_input(x: SampleTensor, grid: PeriodicGrid) -> np.ndarray:
    if x.order is not SampleOrder.ffs:
        raise ParameterError("samples must be in ffs order; use core.grid.to_ffs_order first")
    if x.values.shape != grid.shape:
        raise ParameterError(f"sample shape {x.values.shape} does not match grid shape {grid.shape}")
    return x.values


def _analysis(values: np.ndarray, grid: PeriodicGrid, axes: Sequence[int]) -> np.ndarray:
    values = np.asarray(values, dtype=np.complex128)
    ndim = values.ndim
    for axis in axes:
        _, mod_2 = _modulation(grid.dims[axis])
        values = values * _along(np.conj(mod_2), axis, ndim)
    X = spectral.dftn(values, axes=axes)
    for axis in axes:
        mod_1, _ = _modulation(grid.dims[axis])
        X *= _along(np.conj(mod_1), axis, ndim) / grid.dims[axis].sample_count
    return X


def _synthesis(coeffs: np.ndarray, grid: PeriodicGrid, axes: Sequence[int]) -> np.ndarray:
    # padding is treated as zero regardless of its content
    X = np.zeros_like(coeffs)
    X[_bandlimited_block(grid)] = coeffs[_bandlimited_block(grid)]
    ndim = X.ndim
    for axis in axes:
        mod_1, _ = _modulation(grid.dims[axis])
        X *= _along(mod_1 * grid.dims[axis].sample_count, axis, ndim)
    x = spectral.idftn(X, axes=axes)
    for axis in axes:
        _, mod_2 = _modulation(grid.dims[axis])
        x *= _along(mod_2, axis, ndim)
    return x


def _require_1d(grid: PeriodicGrid) -> None:
    if grid.ndim != 1:
        raise ParameterError(f"1-D transform called with a {grid.ndim}-D grid; use the N-D variant")


def ffs(x: SampleTensor, grid: PeriodicGrid) -> FsCoefficients:
    """FS coefficients of a 1-D signal from ffs-ordered samples."""
    _require_1d(grid)
    values = _check_input(x, grid)
    return FsCoefficients(grid=grid, coeffs=_analysis(values, grid, (0,)))


def iffs(X: FsCoefficients) -> SampleTensor:
    """Samples (ffs order) of a 1-D bandlimited signal from its FS coefficients."""
    _require_1d(X.grid)
    return SampleTensor.ffs(_synthesis(X.coeffs, X.grid, (0,)))


def ffsn(x: SampleTensor, grid: PeriodicGrid) -> FsCoefficients:
    """N-D FS coefficients; one modulated DFT per axis."""
    values = _check_input(x, grid)
    return FsCoefficients(grid=grid, coeffs=_analysis(values, grid, tuple(range(grid.ndim))))


def iffsn(X: FsCoefficients) -> SampleTensor:
    return SampleTensor.ffs(_synthesis(X.coeffs, X.grid, tuple(range(X.grid.ndim))))
