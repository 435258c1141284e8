# === cli/bench.py ===
"""Timing studies: CZT interpolation vs zero-padding, FS convolution vs direct convolution."""
from __future__ import annotations

import logging
import math
from typing import List, Sequence

import numpy as np

import config
from cli.errors import CrossCheckError
from cli.oracles import naive_circular_convolve_2d, random_complex, relative_error
from cli.records import BenchRecord
from cli.timing import time_call
from core.convolve import convolve
from core.errors import ParameterError
from core.ffs import FsCoefficients, ffsn, iffsn
from core.grid import DimSpec, PeriodicGrid, SampleTensor, from_ffs_order, natural_sample_points
from core.interp import InterpRequest, fs_interpn, fs_interpn_zero_pad

log = logging.getLogger(__name__)

PERIOD = 1.0
CENTER = 0.0
HIGHLIGHT_FRACTION = 0.02


def _cross_check(fast: np.ndarray, reference: np.ndarray, label: str) -> float:
    err = relative_error(fast, reference)
    if err > config.CROSS_CHECK_RTOL:
        raise CrossCheckError(f"{label}: methods disagree, relative error {err:.3e}")
    log.info("✅ %s: cross-check passed (relative error %.2e)", label, err)
    return err


def _check_reps(reps: int) -> None:
    if reps < config.MIN_REPS:
        raise ParameterError(f"need at least {config.MIN_REPS} repetitions, got {reps}")


def random_signal(grid: PeriodicGrid, rng: np.random.Generator) -> SampleTensor:
    """Natural-order samples of a random signal bandlimited to the grid's bandwidths."""
    coeffs = FsCoefficients.from_trimmed(random_complex(rng, grid.bandwidths), grid)
    return from_ffs_order(iffsn(coeffs), grid)


def _coefficients(grid: PeriodicGrid, seed: int) -> np.ndarray:
    """FS coefficients recovered from samples of a random bandlimited signal."""
    rng = np.random.default_rng(seed)
    truth = random_complex(rng, grid.bandwidths)
    samples = iffsn(FsCoefficients.from_trimmed(truth, grid))
    return ffsn(samples, grid).trim()


def matched_plan(dim: DimSpec, M: int, fraction: float):
    """Zero-pad length and CZT interval with the same sample spacing.

    The zero-pad grid has N_target = ceil((M - 1) / fraction) points over one
    period; the interval covers its first M points, so both methods evaluate
    the signal at identical timestamps.
    """
    if not 0 < fraction <= 1:
        raise ParameterError(f"region fraction must lie in (0, 1], got {fraction}")
    if M < 2:
        raise ParameterError(f"need M >= 2 interpolation points, got {M}")
    N_target = max(math.ceil((M - 1) / fraction - 1e-9), M, dim.bandwidth)
    padded = DimSpec(
        period=dim.period, center=dim.center, bandwidth=dim.bandwidth, sample_count=N_target
    )
    t = natural_sample_points(padded)
    return N_target, InterpRequest(a=t[0], b=t[M - 1], M=M)


def _bench_interp(
    n_fs: Sequence[int],
    n_s: Sequence[int],
    fractions: Sequence[float],
    m_values: Sequence[Sequence[int]],
    reps: int,
    seed: int,
) -> List[BenchRecord]:
    _check_reps(reps)
    grid = PeriodicGrid.from_lists(PERIOD, CENTER, list(n_fs), list(n_s))
    X = _coefficients(grid, seed)
    ndim = grid.ndim
    records = []
    for M in m_values:
        for fraction in fractions:
            plans = [matched_plan(d, m, fraction) for d, m in zip(grid.dims, M)]
            N_target = [p[0] for p in plans]
            reqs = [p[1] for p in plans]

            def czt_path():
                return fs_interpn(X, grid.periods, reqs)

            def pad_path():
                return fs_interpn_zero_pad(X, grid.periods, N_target, grid.centers)

            label = f"{ndim}-D M={list(M)} fraction={fraction:g}"
            window = tuple(slice(0, m) for m in M)
            _cross_check(czt_path(), pad_path()[window], label)
            if math.isclose(fraction, HIGHLIGHT_FRACTION):
                log.info("🔧 %s: region matches the 2%% zoom window", label)

            methods: List[tuple] = [("fs_interp", czt_path), ("zero_pad", pad_path)]
            for method, fn in methods:
                mean, std = time_call(fn, reps)
                records.append(
                    BenchRecord(
                        method=method,
                        dim=ndim,
                        n_fs=list(grid.bandwidths),
                        n_s=list(grid.shape),
                        m=list(M),
                        region_fraction=fraction,
                        repetitions=reps,
                        seconds_mean=mean,
                        seconds_std=std,
                    )
                )
                log.info("%s %s: %.3e s ± %.1e", method, label, mean, std)
    return records


def bench_interp_1d(
    n_fs: int = 127,
    n_s: int = 128,
    fractions: Sequence[float] = (0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0),
    m_values: Sequence[int] = (512,),
    reps: int = config.DEFAULT_REPS,
    seed: int = config.DEFAULT_SEED,
) -> List[BenchRecord]:
    """CZT interpolation vs zero-padded synthesis on a 1-D signal."""
    return _bench_interp([n_fs], [n_s], fractions, [(m,) for m in m_values], reps, seed)


def bench_interp_2d(
    n_fs: Sequence[int] = (255, 255),
    n_s: Sequence[int] = (256, 256),
    fractions: Sequence[float] = (0.02, 0.05, 0.1, 0.2, 0.5, 1.0),
    m: Sequence[int] = (32, 32),
    reps: int = config.DEFAULT_REPS,
    seed: int = config.DEFAULT_SEED,
) -> List[BenchRecord]:
    """CZT interpolation vs zero-padded synthesis on a 2-D signal."""
    if not len(n_fs) == len(n_s) == len(m) == 2:
        raise ParameterError("2-D benchmark needs two values for N_FS, N_s and M")
    return _bench_interp(n_fs, n_s, fractions, [tuple(m)], reps, seed)


def aligned_grid(size: int) -> PeriodicGrid:
    """Square grid of ``size`` samples per axis whose timestamps include T m / size.

    Odd sizes use the full bandwidth; even sizes use size - 1 and shift the
    center by half a sample so the direct convolution indexes the same points.
    """
    if size % 2:
        return PeriodicGrid.from_lists(PERIOD, 0.0, [size, size], [size, size])
    return PeriodicGrid.from_lists(PERIOD, -PERIOD / (2 * size), [size - 1] * 2, [size, size])


def bench_convolve_2d(
    sizes: Sequence[int] = (16, 32, 64, 128),
    reps: int = config.DEFAULT_REPS,
    seed: int = config.DEFAULT_SEED,
) -> List[BenchRecord]:
    """FS-coefficient circular convolution vs direct spatial circular convolution."""
    _check_reps(reps)
    for size in sizes:
        if size < 4:
            raise ParameterError(f"convolution sizes must be >= 4, got {size}")

    records = []
    for size in sizes:
        grid = aligned_grid(size)
        f = random_signal(grid, np.random.default_rng([seed, size, 0]))
        h = random_signal(grid, np.random.default_rng([seed, size, 1]))
        offsets = (grid.dims[0].half_count, grid.dims[1].half_count)

        def ffs_path():
            return convolve(f, h, grid).values

        def direct_path():
            return naive_circular_convolve_2d(f.values, h.values, offsets)

        _cross_check(ffs_path(), direct_path(), f"convolve {size}x{size}")

        methods: List[tuple] = [("ffs_convolve", ffs_path), ("direct_convolve", direct_path)]
        for method, fn in methods:
            mean, std = time_call(fn, reps)
            records.append(
                BenchRecord(
                    method=method,
                    dim=2,
                    n_fs=list(grid.bandwidths),
                    n_s=list(grid.shape),
                    repetitions=reps,
                    seconds_mean=mean,
                    seconds_std=std,
                )
            )
            log.info("%s %dx%d: %.3e s ± %.1e", method, size, size, mean, std)
    return records


def speedups(records: Sequence[BenchRecord], fast: str, slow: str) -> dict:
    """Ratio slow/fast per (N_s, M, fraction) key, for reporting."""
    by_key: dict = {}
    for r in records:
        key = (tuple(r.n_s), tuple(r.m or ()), r.region_fraction)
        by_key.setdefault(key, {})[r.method] = r.seconds_mean
    return {
        key: times[slow] / times[fast]
        for key, times in by_key.items()
        if fast in times and slow in times
    }

