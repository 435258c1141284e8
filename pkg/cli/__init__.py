# === cli/__init__.py ===
from .bench import bench_convolve_2d, bench_interp_1d, bench_interp_2d
from .errors import CrossCheckError
from .optics import OpticsConfig, OpticsResult, demo_optics
from .records import BenchRecord, write_csv, write_intensity_csv, write_pgm
from .verify import VerifyReport, run_verify

__all__ = [
    "bench_interp_1d", "bench_interp_2d", "bench_convolve_2d",
    "CrossCheckError",
    "OpticsConfig", "OpticsResult", "demo_optics",
    "BenchRecord", "write_csv", "write_intensity_csv", "write_pgm",
    "VerifyReport", "run_verify",
]
