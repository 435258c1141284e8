# === test_bench.py ===
import csv
import io
import logging

import numpy as np
import pytest

from cli.bench import (
    aligned_grid,
    bench_convolve_2d,
    bench_interp_1d,
    bench_interp_2d,
    matched_plan,
    random_signal,
    speedups,
)
from cli.oracles import naive_circular_convolve_2d, relative_error
from cli.records import CSV_HEADER, BenchRecord, to_gray8, write_csv, write_intensity_csv, write_pgm
from cli.timing import time_call
from core.convolve import convolve
from core.errors import ParameterError
from core.grid import DimSpec, PeriodicGrid, natural_sample_points
from pydantic import ValidationError


def by_method(records, method):
    return [r for r in records if r.method == method]


def test_matched_plan_shares_sample_spacing():
    d = DimSpec(period=1.0, center=0.0, bandwidth=127, sample_count=128)
    N_target, req = matched_plan(d, 512, 0.01)
    assert N_target == 51100
    assert req.step == pytest.approx(1.0 / N_target)
    padded = DimSpec(period=1.0, center=0.0, bandwidth=127, sample_count=N_target)
    np.testing.assert_allclose(req.a, natural_sample_points(padded)[0])


def test_matched_plan_full_period_never_below_bandwidth():
    d = DimSpec(period=1.0, center=0.0, bandwidth=127, sample_count=128)
    N_target, req = matched_plan(d, 32, 1.0)
    assert N_target == 127
    assert req.M == 32


@pytest.mark.parametrize("fraction, M", [(0.0, 16), (1.5, 16), (0.5, 1)])
def test_matched_plan_rejects(fraction, M):
    d = DimSpec(period=1.0, center=0.0, bandwidth=5, sample_count=5)
    with pytest.raises(ParameterError):
        matched_plan(d, M, fraction)


def test_bench_interp_1d_rows():
    records = bench_interp_1d(n_fs=31, n_s=32, fractions=(0.1, 1.0), m_values=(16, 40), reps=3, seed=1)
    assert len(records) == 2 * 2 * 2
    for r in records:
        assert r.repetitions == 3
        assert r.seconds_mean > 0
        assert r.seconds_std >= 0
        assert r.dim == 1
    assert {r.method for r in records} == {"fs_interp", "zero_pad"}


def test_full_period_row_logs_cross_check(caplog):
    with caplog.at_level(logging.INFO, logger="cli.bench"):
        bench_interp_1d(n_fs=15, n_s=16, fractions=(1.0,), m_values=(8,), reps=3)
    assert any("fraction=1: cross-check passed" in m for m in caplog.messages)


def test_bench_interp_2d_rows():
    records = bench_interp_2d(n_fs=(15, 17), n_s=(16, 18), fractions=(0.02, 1.0), m=(8, 6), reps=3, seed=2)
    assert len(records) == 4
    assert records[0].n_fs == [15, 17]
    assert records[0].m == [8, 6]


def test_bench_interp_2d_rejects_single_point_region():
    with pytest.raises(ParameterError):
        bench_interp_2d(n_fs=(15, 15), n_s=(16, 16), fractions=(0.5,), m=(1, 1), reps=3)


def test_reps_minimum():
    with pytest.raises(ParameterError):
        bench_interp_1d(n_fs=7, n_s=8, fractions=(1.0,), m_values=(8,), reps=2)
    with pytest.raises(ParameterError):
        time_call(lambda: None, 2)


@pytest.mark.parametrize("size, bandwidth, center", [(16, 15, -1 / 32), (17, 17, 0.0)])
def test_aligned_grid_is_square(size, bandwidth, center):
    grid = aligned_grid(size)
    assert grid.ndim == 2
    assert grid.shape == (size, size)
    assert grid.bandwidths == (bandwidth, bandwidth)
    assert grid.centers == pytest.approx((center, center))


def test_bench_convolve_2d_rows():
    records = bench_convolve_2d(sizes=(16, 17), reps=3)
    assert [r.method for r in records] == ["ffs_convolve", "direct_convolve"] * 2
    assert [r.n_s for r in records] == [[16, 16], [16, 16], [17, 17], [17, 17]]
    assert all(r.dim == 2 and r.m is None for r in records)


@pytest.mark.parametrize("size", [16, 17])
def test_naive_convolution_agrees_with_ffs(rng, size):
    grid = aligned_grid(size)
    f, h = random_signal(grid, rng), random_signal(grid, rng)
    offsets = (grid.dims[0].half_count, grid.dims[1].half_count)
    direct = naive_circular_convolve_2d(f.values, h.values, offsets)
    assert relative_error(convolve(f, h, grid).values, direct) <= 1e-8


def test_convolve_sizes_validated():
    with pytest.raises(ParameterError):
        bench_convolve_2d(sizes=(3, 16), reps=3)


def test_czt_path_beats_zero_padding_at_one_percent():
    records = bench_interp_1d(fractions=(0.01,), m_values=(512,), reps=10)
    ratio = speedups(records, "fs_interp", "zero_pad")
    assert len(ratio) == 1
    assert next(iter(ratio.values())) >= 2


def test_ffs_convolution_beats_direct_at_128():
    records = bench_convolve_2d(sizes=(128,), reps=3)
    ratio = speedups(records, "ffs_convolve", "direct_convolve")
    assert next(iter(ratio.values())) >= 10


def test_csv_schema():
    rec = BenchRecord(
        method="fs_interp", dim=2, n_fs=[255, 255], n_s=[256, 256], m=[32, 32],
        region_fraction=0.02, repetitions=10, seconds_mean=1.5e-3, seconds_std=2e-5,
    )
    conv = BenchRecord(method="ffs_convolve", dim=2, n_fs=[15, 15], n_s=[16, 16], repetitions=3, seconds_mean=1e-4, seconds_std=0.0)
    buf = io.StringIO()
    write_csv([rec, conv], buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == CSV_HEADER
    assert rows[0] == "method,dim,N_FS,N_s,M,region_fraction,reps,seconds_mean,seconds_std".split(",")
    assert rows[1] == ["fs_interp", "2", "255x255", "256x256", "32x32", "0.02", "10", "0.0015", "2e-05"]
    assert rows[2][4:6] == ["", ""]


@pytest.mark.parametrize("field, value", [("repetitions", 2), ("seconds_mean", 0.0), ("seconds_std", -1.0)])
def test_record_rejects_bad_fields(field, value):
    kwargs = dict(method="m", dim=1, n_fs=[5], n_s=[5], repetitions=3, seconds_mean=1.0, seconds_std=0.1)
    kwargs[field] = value
    with pytest.raises(ValidationError):
        BenchRecord(**kwargs)


def test_csv_to_file(tmp_path):
    rec = BenchRecord(method="zero_pad", dim=1, n_fs=[7], n_s=[8], repetitions=3, seconds_mean=1.0, seconds_std=0.5)
    out = tmp_path / "bench.csv"
    write_csv([rec], out)
    assert out.read_text().splitlines()[0] == ",".join(CSV_HEADER)


def test_intensity_csv_and_pgm(tmp_path):
    x, y = np.array([0.0, 1.0]), np.array([-1.0, 0.0, 1.0])
    intensity = np.array([[0.0, 1.0, 2.0], [4.0, 3.0, 0.5]])
    write_intensity_csv(x, y, intensity, tmp_path / "i.csv")
    rows = list(csv.reader((tmp_path / "i.csv").read_text().splitlines()))
    assert rows[0] == ["x\\y", "-1", "0", "1"]
    assert rows[2] == ["1", "4", "3", "0.5"]

    write_pgm(intensity, tmp_path / "i.pgm")
    lines = (tmp_path / "i.pgm").read_text().splitlines()
    assert lines[:3] == ["P2", "3 2", "255"]
    assert lines[3].split() == ["0", "64", "128"]
    assert lines[4].split()[0] == "255"


def test_gray8_of_zero_map():
    assert not to_gray8(np.zeros((2, 2))).any()
