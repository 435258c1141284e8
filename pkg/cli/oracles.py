# === cli/oracles.py ===
"""Slow reference implementations used by ``verify`` and the test-suite.

Every function here evaluates a defining sum directly, in O(N^2) or worse.
"""
from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from core.grid import DimSpec, sample_points


def relative_error(actual, expected) -> float:
    """||actual - expected|| / ||expected||, absolute when ``expected`` is zero."""
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    scale = np.linalg.norm(expected)
    diff = np.linalg.norm(actual - expected)
    return float(diff / scale) if scale > 0 else float(diff)


def random_complex(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unit(rng: np.random.Generator) -> complex:
    return complex(np.exp(1j * rng.uniform(-np.pi, np.pi)))


def direct_dft(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    N = x.size
    n = np.arange(N)
    return np.exp(-2j * np.pi * np.outer(n, n) / N) @ x


def direct_idft(X) -> np.ndarray:
    X = np.asarray(X, dtype=np.complex128)
    N = X.size
    n = np.arange(N)
    return np.exp(2j * np.pi * np.outer(n, n) / N) @ X / N


def harmonics(N_FS: int) -> np.ndarray:
    N = (N_FS - 1) // 2
    return np.arange(-N, N + 1)


def direct_synthesis(X, T: float, t) -> np.ndarray:
    """x(t) = sum_k X_k exp(j 2 pi k t / T) for trimmed, ascending-k X."""
    X = np.asarray(X, dtype=np.complex128)
    t = np.asarray(t, dtype=np.float64)
    k = harmonics(X.size)
    return np.exp(2j * np.pi * np.multiply.outer(t, k) / T) @ X


def direct_synthesis_nd(X, T: Sequence[float], points: Sequence[np.ndarray]) -> np.ndarray:
    """Separable N-D synthesis on the tensor grid of per-axis ``points``."""
    out = np.asarray(X, dtype=np.complex128)
    for axis, (period, t) in enumerate(zip(T, points)):
        k = harmonics(out.shape[axis])
        V = np.exp(2j * np.pi * np.multiply.outer(np.asarray(t, dtype=np.float64), k) / period)
        out = np.moveaxis(np.tensordot(V, out, axes=([1], [axis])), 0, axis)
    return out


def direct_fs_solve(x_ffs, dim: DimSpec) -> np.ndarray:
    """FS coefficients by the conjugate-transpose solve of the sampled synthesis system.

    The synthesis matrix V[n, k] = exp(j 2 pi k t_n / T) has orthogonal columns
    of squared norm N_s, so X = V^H x / N_s. Padded with Q zeros.
    """
    t, _ = sample_points(dim)
    k = harmonics(dim.bandwidth)
    V = np.exp(2j * np.pi * np.outer(t, k) / dim.period)
    X = V.conj().T @ np.asarray(x_ffs, dtype=np.complex128) / dim.sample_count
    return np.r_[X, np.zeros(dim.padding)]


def direct_czt(x, A: complex, W: complex, M: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    n = np.arange(x.size)
    k = np.arange(M)
    return (W ** np.outer(k, n)) @ (x * A ** (-n.astype(np.float64)))


def quadrature_convolve(F, H, T: float, t_out, n_quad: int = 4096) -> np.ndarray:
    """Riemann sum of the periodic convolution integral of two 1-D bandlimited signals."""
    tau = T * np.arange(n_quad) / n_quad
    f_tau = direct_synthesis(F, T, tau)
    t_out = np.asarray(t_out, dtype=np.float64)
    h_shift = direct_synthesis(H, T, np.subtract.outer(t_out, tau))
    return (T / n_quad) * h_shift @ f_tau


def naive_circular_convolve_2d(f, h, offsets: Tuple[int, int]) -> np.ndarray:
    """Direct O(N^4) circular convolution of natural-order 2-D samples.

    Computes g[i, j] = 1/(Nx Ny) sum_{p,q} f[p, q] h[i - p + ox, j - q + oy]
    (indices mod N), which samples (1/T^2) * the periodic convolution integral
    when the grid contains the points T m / N; ``offsets`` are the natural
    indices of time zero.
    """
    f = np.asarray(f, dtype=np.complex128)
    h = np.asarray(h, dtype=np.complex128)
    Nx, Ny = f.shape
    ox, oy = offsets
    out = np.zeros_like(h)
    for p in range(Nx):
        h_rows = np.roll(h, p - ox, axis=0)
        for q in range(Ny):
            out += f[p, q] * np.roll(h_rows, q - oy, axis=1)
    return out / (Nx * Ny)
