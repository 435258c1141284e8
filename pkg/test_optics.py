# === test_optics.py ===
import numpy as np
import pytest
from pydantic import ValidationError

from cli.optics import OpticsConfig, demo_optics, transfer_function
from core.errors import ParameterError
from core.ffs import ffsn
from core.grid import PeriodicGrid, SampleTensor, natural_sample_points, to_ffs_order
from core.interp import InterpRequest, fs_interpn

SMALL = dict(n_s=32, m=(24, 20), tiles=(2, 2))


def test_energy_conserved_and_tiles_consistent():
    result = demo_optics(OpticsConfig())
    assert result.evanescent_fraction == 0
    assert abs(result.energy_ratio - 1) <= 0.01
    assert result.tile_error <= 1e-9
    assert result.intensity.shape == (64, 64)
    assert np.all(result.intensity >= 0)


def test_zero_distance_reproduces_interpolated_aperture():
    cfg = OpticsConfig(distance=0.0, **SMALL)
    result = demo_optics(cfg)

    N_s = cfg.sample_count
    grid = PeriodicGrid.from_lists(cfg.period, 0.0, [N_s - 1] * 2, [N_s, N_s])
    t = natural_sample_points(grid.dims[0])
    xx, yy = np.meshgrid(t, t, indexing="ij")
    aperture = (xx ** 2 + yy ** 2 <= cfg.radius ** 2).astype(complex)
    F = ffsn(to_ffs_order(SampleTensor.natural(aperture), grid), grid).trim()
    (ax, bx, ay, by) = cfg.region
    reqs = (InterpRequest(a=ax, b=bx, M=cfg.m[0]), InterpRequest(a=ay, b=by, M=cfg.m[1]))
    expected = np.abs(fs_interpn(F, (cfg.period, cfg.period), reqs)) ** 2
    np.testing.assert_allclose(result.intensity, expected, rtol=1e-10, atol=1e-12 * expected.max())


def test_evanescent_components_lose_energy():
    result = demo_optics(OpticsConfig(wavelength=1e-4, **SMALL))
    assert result.evanescent_fraction > 0
    assert result.energy_out < result.energy_in


def test_transfer_function_is_unit_modulus_when_propagating():
    k = np.arange(-3, 4)
    H = transfer_function(k, k, 1.0, 0.2, 5.0)
    propagating = (k[:, None] ** 2 + k[None, :] ** 2) < 25
    np.testing.assert_allclose(np.abs(H[propagating]), 1.0)
    assert np.all(H[~propagating] == 0)


def test_uneven_tiles_match_single_shot():
    result = demo_optics(OpticsConfig(n_s=32, m=(25, 19), tiles=(3, 2)))
    assert result.tile_error <= 1e-9


def test_region_outside_period_rejected():
    with pytest.raises(ParameterError):
        demo_optics(OpticsConfig(region=(-0.5e-3, 5e-3, -0.5e-3, 0.5e-3), **SMALL))


@pytest.mark.parametrize(
    "kwargs",
    [dict(wavelength=0.0), dict(distance=-1.0), dict(m=(3, 64), tiles=(2, 2)), dict(tiles=(0, 1))],
)
def test_invalid_geometry(kwargs):
    with pytest.raises(ValidationError):
        OpticsConfig(**kwargs)


def test_odd_sample_count_builds_square_grid():
    result = demo_optics(OpticsConfig(n_s=33, pad=1, m=(24, 20), tiles=(2, 2)))
    assert result.field.shape == (24, 20)
    assert abs(result.energy_ratio - 1) <= 0.01
    assert result.tile_error <= 1e-9
