# === cli/records.py ===
"""Benchmark rows and the CSV / PGM writers used by the CLI."""
from __future__ import annotations

import csv
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Union

import numpy as np
from pydantic import BaseModel, Field

import config

CSV_HEADER = [
    "method",
    "dim",
    "N_FS",
    "N_s",
    "M",
    "region_fraction",
    "reps",
    "seconds_mean",
    "seconds_std",
]

PathLike = Union[str, Path, TextIO, None]


class BenchRecord(BaseModel):
    """One timing measurement."""

    method: str
    dim: int = Field(ge=1)
    n_fs: List[int]
    n_s: List[int]
    m: Optional[List[int]] = None
    region_fraction: Optional[float] = None
    repetitions: int = Field(ge=config.MIN_REPS)
    seconds_mean: float = Field(gt=0)
    seconds_std: float = Field(ge=0)

    def to_row(self) -> dict:
        return {
            "method": self.method,
            "dim": self.dim,
            "N_FS": _join(self.n_fs),
            "N_s": _join(self.n_s),
            "M": _join(self.m) if self.m else "",
            "region_fraction": "" if self.region_fraction is None else f"{self.region_fraction:g}",
            "reps": self.repetitions,
            "seconds_mean": f"{self.seconds_mean:.9g}",
            "seconds_std": f"{self.seconds_std:.9g}",
        }


def _join(values: Iterable[int]) -> str:
    return "x".join(str(v) for v in values)


@contextmanager
def _open_out(out: PathLike):
    if out is None or str(out) == "-":
        yield sys.stdout
    elif hasattr(out, "write"):
        yield out
    else:
        with open(out, "w", newline="") as fh:
            yield fh


def write_csv(records: Iterable[BenchRecord], out: PathLike = None) -> None:
    """Write benchmark rows with the fixed header; ``out`` None or "-" means stdout."""
    with _open_out(out) as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER)
        writer.writeheader()
        for record in records:
            writer.writerow(record.to_row())


def write_intensity_csv(x: np.ndarray, y: np.ndarray, intensity: np.ndarray, out: PathLike) -> None:
    """Header row ``x\\y, y_0, ..., y_{n-1}``, then one row per x: ``x_i, I[i, 0], ...``."""
    with _open_out(out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["x\\y"] + [f"{v:.9g}" for v in y])
        for xi, row in zip(x, intensity):
            writer.writerow([f"{xi:.9g}"] + [f"{v:.9g}" for v in row])


def to_gray8(intensity: np.ndarray) -> np.ndarray:
    """Scale to 0..255 by the maximum; an all-zero map stays zero."""
    intensity = np.asarray(intensity, dtype=np.float64)
    peak = intensity.max() if intensity.size else 0.0
    if peak <= 0:
        return np.zeros(intensity.shape, dtype=np.uint8)
    return np.rint(255 * intensity / peak).astype(np.uint8)


def write_pgm(intensity: np.ndarray, out: Union[str, Path]) -> None:
    """Plain (P2) 8-bit PGM: width = columns, height = rows, one text row per image row."""
    gray = to_gray8(intensity)
    height, width = gray.shape
    with open(out, "w") as fh:
        fh.write(f"P2\n{width} {height}\n255\n")
        for row in gray:
            fh.write(" ".join(str(v) for v in row) + "\n")
