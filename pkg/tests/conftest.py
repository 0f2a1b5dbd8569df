"""Shared fixtures: a clean configuration per test, grids and seeded generators."""

import math
from pathlib import Path

import numpy as np
import pytest
from loguru import logger

from src.core.config import Config
from src.generator import GeneratorSpec
from src.verify import GridSpec, SuiteConfig

CONFIG_DIR = Path(__file__).resolve().parents[1] / "config"


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test sees the default environment and a fresh Config."""
    for name in ("MOLNAR_SEED", "MOLNAR_LOG_LEVEL", "MOLNAR_LOG_FILE", "MOLNAR_TOLERANCE"):
        monkeypatch.delenv(name, raising=False)
    Config.reset()
    yield
    Config.reset()
    logger.remove()


@pytest.fixture
def log_messages():
    """Messages logged by loguru at WARNING and above during the test."""
    messages = []
    handler_id = logger.add(lambda message: messages.append(message.record["message"]), level="WARNING")
    yield messages
    logger.remove(handler_id)


@pytest.fixture
def config_dir():
    return CONFIG_DIR


@pytest.fixture
def grid():
    return np.logspace(-3, 3, 64)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def half_sine():
    """B_1 = 1/2 with p = 2 pi (a = 1)."""
    return GeneratorSpec.fourier(2.0 * math.pi, [0.5])


@pytest.fixture
def two_harmonics():
    return GeneratorSpec.fourier(4.0, [0.3, 0.1])


@pytest.fixture
def small_suite():
    """Fast suite settings for tests."""
    return SuiteConfig(grid=GridSpec(count=16), matrix_dims=[2, 3], trials=4, seed=7)
