# === cli/verify.py ===
"""Randomized oracle suites: every fast transform against its defining sum."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

import config
from cli import oracles
from core.convolve import ConvolveOptions, ScaleMode, convolve
from core.czt import CztParams, czt
from core.errors import ParameterError
from core.ffs import ffs
from core.grid import PeriodicGrid, SampleTensor, natural_sample_points, sample_points
from core.interp import InterpRequest, fs_interp, interp_points
from core.spectral import dft, idft

log = logging.getLogger(__name__)

# multiplies every fast result when perturbation is requested
PERTURBATION = 1 + 1e-3


class CaseResult(BaseModel):
    suite: str
    case: int
    error: float
    tolerance: float
    params: Dict[str, Any]

    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance


class VerifyReport(BaseModel):
    seed: int
    suites: List[str]
    results: List[CaseResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> Optional[CaseResult]:
        return next((r for r in self.results if not r.passed), None)

    def counts(self) -> Dict[str, tuple]:
        out = {}
        for name in self.suites:
            rs = [r for r in self.results if r.suite == name]
            out[name] = (sum(r.passed for r in rs), len(rs))
        return out


def _odd_bandwidth(rng, high: int) -> int:
    return 2 * int(rng.integers(0, (high - 1) // 2 + 1)) + 1


def _spectral_case(rng, scale):
    N = int(rng.integers(1, 65))
    x = oracles.random_complex(rng, N)
    err = max(
        oracles.relative_error(scale * dft(x), oracles.direct_dft(x)),
        oracles.relative_error(scale * idft(x), oracles.direct_idft(x)),
    )
    return err, 1e-12, {"N": N}


def _ffs_case(rng, scale):
    N_FS = _odd_bandwidth(rng, 33)
    N_s = N_FS + int(rng.integers(0, 9))
    T = float(rng.uniform(0.5, 3.0))
    T_c = float(rng.uniform(-1.0, 1.0))
    grid = PeriodicGrid.from_lists(T, T_c, N_FS, N_s)
    X = oracles.random_complex(rng, N_FS)
    t, _ = sample_points(grid.dims[0])
    x = oracles.direct_synthesis(X, T, t)
    got = scale * ffs(SampleTensor.ffs(x), grid).coeffs
    err = max(
        oracles.relative_error(got, oracles.direct_fs_solve(x, grid.dims[0])),
        oracles.relative_error(got, np.r_[X, np.zeros(N_s - N_FS)]),
    )
    return err, 1e-10, {"T": T, "T_c": T_c, "N_FS": N_FS, "N_s": N_s}


def _czt_case(rng, scale):
    N = int(rng.integers(1, 129))
    M = int(rng.integers(1, 129))
    A, W = oracles.random_unit(rng), oracles.random_unit(rng)
    x = oracles.random_complex(rng, N)
    got = scale * czt(x, CztParams(A=A, W=W, M=M))
    err = oracles.relative_error(got, oracles.direct_czt(x, A, W, M))
    return err, 1e-10, {"N": N, "M": M, "A": str(A), "W": str(W)}


def _interp_case(rng, scale):
    N_FS = _odd_bandwidth(rng, 31)
    M = int(rng.integers(2, 65))
    T = float(rng.uniform(0.5, 3.0))
    a = float(rng.uniform(-T / 2, T / 2))
    b = float(rng.uniform(a + 1e-3 * T, T / 2 + 1e-3 * T))
    req = InterpRequest(a=a, b=b, M=M)
    X = oracles.random_complex(rng, N_FS)
    got = scale * fs_interp(X, T, req)
    err = oracles.relative_error(got, oracles.direct_synthesis(X, T, interp_points(req)))
    return err, 1e-10, {"N_FS": N_FS, "M": M, "T": T, "a": a, "b": b}


def _convolve_case(rng, scale):
    N_FS = _odd_bandwidth(rng, 15)
    N_s = N_FS + int(rng.integers(0, 6))
    T = float(rng.uniform(0.5, 2.0))
    grid = PeriodicGrid.from_lists(T, 0.0, N_FS, N_s)
    F, H = oracles.random_complex(rng, N_FS), oracles.random_complex(rng, N_FS)
    t = natural_sample_points(grid.dims[0])
    f = SampleTensor.natural(oracles.direct_synthesis(F, T, t))
    h = SampleTensor.natural(oracles.direct_synthesis(H, T, t))
    g = convolve(f, h, grid, ConvolveOptions(scale=ScaleMode.integral)).values
    err = oracles.relative_error(scale * g, oracles.quadrature_convolve(F, H, T, t))
    return err, 1e-6, {"N_FS": N_FS, "N_s": N_s, "T": T}


SUITES: Dict[str, Callable] = {
    "spectral": _spectral_case,
    "ffs": _ffs_case,
    "czt": _czt_case,
    "interp": _interp_case,
    "convolve": _convolve_case,
}


def run_verify(
    suites: Optional[Sequence[str]] = None,
    seed: int = config.DEFAULT_SEED,
    cases: int = 50,
    perturb: bool = False,
    threads: int = config.THREADS,
) -> VerifyReport:
    """Run ``cases`` randomized cases per suite; case i of suite s uses rng seed [seed, s, i]."""
    names = list(SUITES) if suites is None or "all" in suites else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ParameterError(f"unknown suite(s) {unknown}; choose from {['all', *SUITES]}")
    if cases < 1:
        raise ParameterError(f"need at least one case per suite, got {cases}")
    scale = PERTURBATION if perturb else 1.0

    jobs = [(name, list(SUITES).index(name), i) for name in names for i in range(cases)]

    def run(job) -> CaseResult:
        name, suite_id, i = job
        rng = np.random.default_rng([seed, suite_id, i])
        err, tol, params = SUITES[name](rng, scale)
        return CaseResult(suite=name, case=i, error=err, tolerance=tol, params=params)

    log.info("🔧 verifying %s with seed %d (%d cases each)", ", ".join(names), seed, cases)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run, jobs))
    return VerifyReport(seed=seed, suites=names, results=results)
