"""Shared pytest fixtures."""

import numpy as np
import pytest
from loguru import logger

from sge_elliptic.config import settings


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so sampled checks are reproducible."""
    return np.random.default_rng(settings.VERIFY_SEED)


@pytest.fixture
def log_records():
    """Collect loguru records emitted during a test."""
    records = []
    sink_id = logger.add(lambda message: records.append(message.record), level="DEBUG")
    yield records
    logger.remove(sink_id)
