# === cli/timing.py ===
import time
from typing import Callable, Tuple

import numpy as np

import config
from core.errors import ParameterError


def time_call(fn: Callable[[], object], reps: int) -> Tuple[float, float]:
    """Mean and standard deviation (seconds) of ``reps`` calls after one warm-up call."""
    if reps < config.MIN_REPS:
        raise ParameterError(f"need at least {config.MIN_REPS} repetitions, got {reps}")
    fn()
    seconds = np.empty(reps)
    for i in range(reps):
        start = time.perf_counter()
        fn()
        seconds[i] = time.perf_counter() - start
    return float(seconds.mean()), float(seconds.std(ddof=1))
