# === core/convolve.py ===
"""Circular convolution of periodic bandlimited signals through FS coefficients."""
from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.errors import ParameterError
from core.ffs import FsCoefficients, ffsn, iffsn
from core.grid import PeriodicGrid, SampleOrder, SampleTensor, from_ffs_order, to_ffs_order


class ScaleMode(str, Enum):
    # G_k = F_k H_k, i.e. (1/T) * integral over one period, per axis
    coefficient_product = "coefficient_product"
    # G_k = T F_k H_k, the periodic convolution integral itself
    integral = "integral"


class ConvolveOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    reorder: bool = True
    scale: ScaleMode = ScaleMode.coefficient_product


def convolve(
    f: SampleTensor,
    h: SampleTensor,
    grid: PeriodicGrid,
    opts: ConvolveOptions = ConvolveOptions(),
) -> SampleTensor:
    """Circular convolution of two signals sharing ``grid``.

    With ``opts.reorder`` the inputs are natural-order samples and are
    reordered internally; otherwise they must already be in ffs order. The
    output comes back in the order of the inputs.
    """
    expected = SampleOrder.natural if opts.reorder else SampleOrder.ffs
    for name, s in (("f", f), ("h", h)):
        if s.order is not expected:
            raise ParameterError(
                f"{name} is in {s.order.value} order but reorder={opts.reorder} expects {expected.value}"
            )
        if s.values.shape != grid.shape:
            raise ParameterError(
                f"{name} has shape {s.values.shape}, grid expects {grid.shape}"
            )

    if opts.reorder:
        f, h = to_ffs_order(f, grid), to_ffs_order(h, grid)

    F = ffsn(f, grid).coeffs
    H = ffsn(h, grid).coeffs
    G = F * H
    if opts.scale is ScaleMode.integral:
        G *= np.prod(grid.periods)

    g = iffsn(FsCoefficients(grid=grid, coeffs=G))
    if opts.reorder:
        g = from_ffs_order(g, grid)
    return g
