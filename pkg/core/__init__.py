# === core/__init__.py ===
from .errors import ParameterError
from .grid import (
    DimSpec,
    PeriodicGrid,
    SampleOrder,
    SampleTensor,
    ffs_index,
    from_ffs_order,
    natural_sample_points,
    sample_points,
    sample_points_nd,
    to_ffs_order,
)
from .spectral import dft, dftn, idft, idftn, next_fast_len
from .ffs import FsCoefficients, ffs, ffsn, iffs, iffsn
from .czt import CztParams, czt, cztn
from .interp import (
    InterpRequest,
    fs_interp,
    fs_interp_zero_pad,
    fs_interpn,
    fs_interpn_zero_pad,
    interp_points,
)
from .convolve import ConvolveOptions, ScaleMode, convolve
from .funcs import DirichletSpec, apply_taper, dirichlet, dirichlet_2d, dirichlet_nd

__all__ = [
    "ParameterError",
    "DimSpec", "PeriodicGrid", "SampleOrder", "SampleTensor",
    "ffs_index", "sample_points", "sample_points_nd", "natural_sample_points",
    "to_ffs_order", "from_ffs_order",
    "dft", "idft", "dftn", "idftn", "next_fast_len",
    "FsCoefficients", "ffs", "iffs", "ffsn", "iffsn",
    "CztParams", "czt", "cztn",
    "InterpRequest", "interp_points", "fs_interp", "fs_interpn",
    "fs_interp_zero_pad", "fs_interpn_zero_pad",
    "ConvolveOptions", "ScaleMode", "convolve",
    "DirichletSpec", "dirichlet", "dirichlet_2d", "dirichlet_nd", "apply_taper",
]
