# === api/routes/transforms.py ===
from fastapi import APIRouter, HTTPException
import logging

from api.schemas.transform_schema import (
    CoefficientsResponse,
    ComplexArray,
    ConvolveApiRequest,
    FfsRequest,
    IffsRequest,
    InterpApiRequest,
    SamplesResponse,
)
from core.convolve import ConvolveOptions, convolve
from core.ffs import FsCoefficients, ffsn, iffsn
from core.grid import SampleOrder, SampleTensor, from_ffs_order, to_ffs_order
from core.interp import InterpRequest, fs_interpn, interp_points

log = logging.getLogger(__name__)

router = APIRouter()


def _bad_request(e: ValueError) -> HTTPException:
    log.info("rejected request: %s", e)
    return HTTPException(status_code=400, detail=str(e))


@router.post("/ffs", response_model=CoefficientsResponse)
def compute_ffs(request: FfsRequest):
    """FS coefficients of samples given in natural or ffs order"""
    try:
        grid = request.grid.to_grid()
        samples = SampleTensor(values=request.samples.to_numpy(), order=request.order)
        if samples.order is SampleOrder.natural:
            samples = to_ffs_order(samples, grid)
        X = ffsn(samples, grid)
    except ValueError as e:
        raise _bad_request(e)

    coeffs = X.trim() if request.trim else X.coeffs
    return CoefficientsResponse(coefficients=ComplexArray.from_numpy(coeffs), trimmed=request.trim)


@router.post("/iffs", response_model=SamplesResponse)
def compute_iffs(request: IffsRequest):
    """Samples of a bandlimited signal from trimmed or padded coefficients"""
    try:
        grid = request.grid.to_grid()
        values = request.coefficients.to_numpy()
        if values.shape == grid.bandwidths:
            X = FsCoefficients.from_trimmed(values, grid)
        else:
            X = FsCoefficients(grid=grid, coeffs=values)
        samples = iffsn(X)
        if request.order is SampleOrder.natural:
            samples = from_ffs_order(samples, grid)
    except ValueError as e:
        raise _bad_request(e)

    return SamplesResponse(samples=ComplexArray.from_numpy(samples.values), order=samples.order)


@router.post("/interp", response_model=SamplesResponse)
def compute_interp(request: InterpApiRequest):
    """Bandlimited interpolation on one closed interval per axis"""
    try:
        reqs = [InterpRequest(a=i.a, b=i.b, M=i.m) for i in request.intervals]
        values = fs_interpn(request.coefficients.to_numpy(), request.periods, reqs)
    except ValueError as e:
        raise _bad_request(e)

    return SamplesResponse(
        samples=ComplexArray.from_numpy(values),
        order=SampleOrder.natural,
        points=[interp_points(r).tolist() for r in reqs],
    )


@router.post("/convolve", response_model=SamplesResponse)
def compute_convolve(request: ConvolveApiRequest):
    """Circular convolution of two signals sharing one grid"""
    order = SampleOrder.natural if request.reorder else SampleOrder.ffs
    try:
        grid = request.grid.to_grid()
        f = SampleTensor(values=request.f.to_numpy(), order=order)
        h = SampleTensor(values=request.h.to_numpy(), order=order)
        g = convolve(f, h, grid, ConvolveOptions(reorder=request.reorder, scale=request.scale))
    except ValueError as e:
        raise _bad_request(e)

    return SamplesResponse(samples=ComplexArray.from_numpy(g.values), order=g.order)
