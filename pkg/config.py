# === config.py ===
import logging
import os

log = logging.getLogger(__name__)


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        log.warning("ignoring %s=%r: not an integer", name, raw)
        return default
    if value < minimum:
        log.warning("ignoring %s=%r: must be >= %d", name, raw, minimum)
        return default
    return value


# verification suites run at most this many cases concurrently
THREADS = _env_int("FFSKIT_THREADS", os.cpu_count() or 1)
FFT_WORKERS = _env_int("FFSKIT_FFT_WORKERS", 1)
DEFAULT_SEED = _env_int("FFSKIT_SEED", 0, minimum=0)

DEFAULT_REPS = 10
MIN_REPS = 3
CROSS_CHECK_RTOL = 1e-8

CHIRP_CACHE_SIZE = 128
MODULATION_CACHE_SIZE = 256

LOG_LEVEL = os.environ.get("FFSKIT_LOG_LEVEL", "INFO").upper()

API_HOST = os.environ.get("FFSKIT_HOST", "0.0.0.0")
API_PORT = _env_int("FFSKIT_PORT", 8000)
