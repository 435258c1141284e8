# === conftest.py ===
import numpy as np
import pytest

import config


@pytest.fixture
def rng():
    return np.random.default_rng(config.DEFAULT_SEED)
