# === core/grid.py ===
"""Periodic sampling grids and the sample orderings used by the FFS transforms.

Samples fed to the analysis transforms are not in ascending-time order. For a
grid with ``N_s`` samples they are arranged as ``[t_0, ..., t_M, t_-M, ..., t_-1]``
(odd ``N_s``) or ``[t_0, ..., t_M-1, t_-M, ..., t_-1]`` (even ``N_s``), which we
call the *ffs* order. Ascending time is the *natural* order.
"""
from __future__ import annotations

from enum import Enum
from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.errors import ParameterError


class DimSpec(BaseModel):
    """One axis of a periodic grid: period, center, bandwidth and sample count."""

    model_config = ConfigDict(frozen=True)

    period: float = Field(gt=0)
    center: float = 0.0
    bandwidth: int = Field(ge=1)
    sample_count: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_sampling(self) -> "DimSpec":
        if self.bandwidth % 2 == 0:
            raise ValueError(f"bandwidth must be odd, got {self.bandwidth}")
        if self.sample_count < self.bandwidth:
            raise ValueError(
                f"sample_count ({self.sample_count}) must be >= bandwidth ({self.bandwidth})"
            )
        # odd N_s needs even Q, even N_s needs odd Q
        if (self.sample_count % 2) == (self.padding % 2):
            raise ValueError(
                f"zero-padding Q={self.padding} has the wrong parity for N_s={self.sample_count}"
            )
        return self

    @property
    def half_bandwidth(self) -> int:
        """N, with bandwidth = 2N + 1."""
        return (self.bandwidth - 1) // 2

    @property
    def padding(self) -> int:
        """Q = N_s - N_FS."""
        return self.sample_count - self.bandwidth

    @property
    def half_count(self) -> int:
        """M: (N_s - 1) / 2 for odd N_s, N_s / 2 for even N_s."""
        if self.sample_count % 2:
            return (self.sample_count - 1) // 2
        return self.sample_count // 2

    @property
    def is_even(self) -> bool:
        return self.sample_count % 2 == 0


class PeriodicGrid(BaseModel):
    """Tensor product of one or more :class:`DimSpec` axes."""

    model_config = ConfigDict(frozen=True)

    dims: Tuple[DimSpec, ...] = Field(min_length=1)

    @classmethod
    def from_lists(
        cls,
        period: Union[float, Sequence[float]],
        center: Union[float, Sequence[float]],
        bandwidth: Union[int, Sequence[int]],
        sample_count: Union[int, Sequence[int]],
    ) -> "PeriodicGrid":
        """Build a grid from per-axis values; scalars are broadcast."""
        columns = [np.atleast_1d(v).tolist() for v in (period, center, bandwidth, sample_count)]
        ndim = max(len(c) for c in columns)
        for c in columns:
            if len(c) not in (1, ndim):
                raise ParameterError(f"per-axis values have inconsistent lengths: {columns}")
        columns = [c * ndim if len(c) == 1 else c for c in columns]
        dims = tuple(
            DimSpec(period=T, center=T_c, bandwidth=N_FS, sample_count=N_s)
            for T, T_c, N_FS, N_s in zip(*columns)
        )
        return cls(dims=dims)

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(d.sample_count for d in self.dims)

    @property
    def bandwidths(self) -> Tuple[int, ...]:
        return tuple(d.bandwidth for d in self.dims)

    @property
    def periods(self) -> Tuple[float, ...]:
        return tuple(d.period for d in self.dims)

    @property
    def centers(self) -> Tuple[float, ...]:
        return tuple(d.center for d in self.dims)


class SampleOrder(str, Enum):
    natural = "natural"
    ffs = "ffs"


class SampleTensor(BaseModel):
    """Sample values tagged with the order they are stored in."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray
    order: SampleOrder = SampleOrder.natural

    @field_validator("values", mode="before")
    @classmethod
    def _as_array(cls, v):
        return np.asarray(v)

    @classmethod
    def natural(cls, values) -> "SampleTensor":
        return cls(values=values, order=SampleOrder.natural)

    @classmethod
    def ffs(cls, values) -> "SampleTensor":
        return cls(values=values, order=SampleOrder.ffs)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.values.shape


def ffs_index(dim: DimSpec) -> np.ndarray:
    """Integer index n of every sample, in ffs order."""
    M = dim.half_count
    if dim.is_even:
        return np.r_[0:M, -M:0]
    return np.r_[0 : M + 1, -M:0]


def sample_points(dim: DimSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Timestamps in ffs order and the natural-to-ffs gather permutation.

    ``x_ffs = x_natural[idx]`` rearranges ascending-time samples into the order
    expected by :func:`core.ffs.ffs`.
    """
    n = ffs_index(dim)
    step = dim.period / dim.sample_count
    if dim.is_even:
        t = dim.center + step * (0.5 + n)
    else:
        t = dim.center + step * n
    idx = n + dim.half_count
    return t, idx


def sample_points_nd(grid: PeriodicGrid) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """Per-axis :func:`sample_points` for every axis of ``grid``."""
    points, indices = [], []
    for dim in grid.dims:
        t, idx = sample_points(dim)
        points.append(t)
        indices.append(idx)
    return points, indices


def natural_sample_points(dim: DimSpec) -> np.ndarray:
    """Grid timestamps in ascending order."""
    t, idx = sample_points(dim)
    out = np.empty_like(t)
    out[idx] = t
    return out


def _check_shape(x: SampleTensor, grid: PeriodicGrid) -> None:
    if x.values.shape != grid.shape:
        raise ParameterError(f"sample shape {x.values.shape} does not match grid shape {grid.shape}")


def to_ffs_order(x: SampleTensor, grid: PeriodicGrid) -> SampleTensor:
    """Rearrange natural-order samples into ffs order along every axis."""
    if x.order is not SampleOrder.natural:
        raise ParameterError("to_ffs_order expects samples in natural order")
    _check_shape(x, grid)
    values = x.values
    for axis, dim in enumerate(grid.dims):
        _, idx = sample_points(dim)
        values = np.take(values, idx, axis=axis)
    return SampleTensor.ffs(values)


def from_ffs_order(x: SampleTensor, grid: PeriodicGrid) -> SampleTensor:
    """Inverse of :func:`to_ffs_order`."""
    if x.order is not SampleOrder.ffs:
        raise ParameterError("from_ffs_order expects samples in ffs order")
    _check_shape(x, grid)
    values = x.values
    for axis, dim in enumerate(grid.dims):
        _, idx = sample_points(dim)
        values = np.take(values, np.argsort(idx), axis=axis)
    return SampleTensor.natural(values)
