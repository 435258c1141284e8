# === test_funcs.py ===
import numpy as np
import pytest
from pydantic import ValidationError

from core.errors import ParameterError
from core.ffs import ffs
from core.funcs import DirichletSpec, apply_taper, dirichlet, dirichlet_2d, dirichlet_nd
from core.grid import PeriodicGrid, SampleTensor, natural_sample_points, to_ffs_order


def direct_dirichlet(t, spec):
    N = (spec.bandwidth - 1) // 2
    k = np.arange(-N, N + 1)
    u = np.asarray(t) - spec.center
    return np.exp(1j * 2 * np.pi * np.multiply.outer(u, k) / spec.period).sum(axis=-1)


def test_peak_at_center():
    spec = DirichletSpec(period=2.0, center=0.3, bandwidth=9)
    assert complex(dirichlet(0.3, spec)) == pytest.approx(9)
    assert complex(dirichlet(0.3 + 2.0, spec)) == pytest.approx(9)


def test_first_zero():
    spec = DirichletSpec(period=1.0, center=0.0, bandwidth=7)
    assert abs(complex(dirichlet(1 / 7, spec))) < 1e-13


def test_matches_direct_sum(rng):
    spec = DirichletSpec(period=1.5, center=-0.2, bandwidth=11)
    t = rng.uniform(-3, 3, size=200)
    np.testing.assert_allclose(dirichlet(t, spec), direct_dirichlet(t, spec), atol=1e-11)


@pytest.mark.parametrize("offset", [0.0, 1e-12, -1e-10, 1e-8, 3.0 + 1e-9])
def test_near_singularity(offset):
    spec = DirichletSpec(period=3.0, center=0.0, bandwidth=13)
    t = np.array([offset])
    np.testing.assert_allclose(dirichlet(t, spec), direct_dirichlet(t, spec), atol=1e-10)


def test_even_bandwidth_rejected():
    with pytest.raises(ValidationError):
        DirichletSpec(period=1.0, bandwidth=4)


def test_2d_peak_and_separability(rng):
    sx = DirichletSpec(period=1.0, center=0.1, bandwidth=5)
    sy = DirichletSpec(period=2.0, center=-0.4, bandwidth=3)
    assert complex(dirichlet_2d(0.1, -0.4, sx, sy)) == pytest.approx(15)
    x, y = rng.uniform(-1, 1, 6), rng.uniform(-1, 1, 8)
    D = dirichlet_2d(x, y, sx, sy)
    np.testing.assert_allclose(D, np.outer(direct_dirichlet(x, sx), direct_dirichlet(y, sy)), atol=1e-12)
    profile = dirichlet(y, sy)
    for row, scale in zip(D, dirichlet(x, sx)):
        np.testing.assert_allclose(row, scale * profile, atol=1e-12)


def test_nd_matches_2d(rng):
    sx = DirichletSpec(period=1.0, bandwidth=5)
    sy = DirichletSpec(period=1.0, bandwidth=7)
    x, y = rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 5)
    np.testing.assert_allclose(dirichlet_nd([x, y], [sx, sy]), dirichlet_2d(x, y, sx, sy), atol=1e-13)
    with pytest.raises(ParameterError):
        dirichlet_nd([x], [sx, sy])


def test_taper_zero_is_identity(rng):
    x = rng.standard_normal(33) + 1j * rng.standard_normal(33)
    np.testing.assert_array_equal(apply_taper(x, 0.0), x)


def test_full_taper_keeps_midpoint(rng):
    x = rng.standard_normal(21)
    y = apply_taper(x, 1.0)
    assert y[10] == pytest.approx(x[10])
    assert y[0] == 0 and y[-1] == 0


def test_half_taper_plateau():
    x = np.arange(1, 101, dtype=float)
    y = apply_taper(x, 0.5)
    assert abs(y[0]) < 1e-15 and abs(y[-1]) < 1e-15
    np.testing.assert_array_equal(y[25:75], x[25:75])
    assert np.all(np.abs(y[1:25]) < x[1:25])


def test_taper_along_axis(rng):
    x = rng.standard_normal((10, 4))
    y = apply_taper(x, 0.4, axis=0)
    for j in range(4):
        np.testing.assert_allclose(y[:, j], apply_taper(x[:, j], 0.4))


@pytest.mark.parametrize("alpha", [-0.1, 1.5])
def test_taper_fraction_range(alpha):
    with pytest.raises(ParameterError):
        apply_taper(np.ones(8), alpha)


def test_taper_reduces_leakage():
    # a sinusoid that does not complete an integer number of cycles per period
    grid = PeriodicGrid.from_lists(1.0, 0.0, 63, 64)
    t = natural_sample_points(grid.dims[0])
    x = np.exp(1j * 2 * np.pi * 5.37 * t)

    def magnitudes(samples):
        X = ffs(to_ffs_order(SampleTensor.natural(samples), grid), grid).trim()
        return np.abs(X)

    k = np.arange(-31, 32)
    outside = np.abs(k - 5.37) > 4
    plain = magnitudes(x)
    tapered = magnitudes(apply_taper(x, 0.5))
    assert np.sum(tapered[outside] ** 2) < np.sum(plain[outside] ** 2)
    assert np.median(tapered[outside]) < np.median(plain[outside])
