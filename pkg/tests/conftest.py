"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from src.supra_sim.domain.models.grid import Grid3, TimeGrid
from src.supra_sim.domain.models.medium import MediumParams, PotentialKind
from src.supra_sim.domain.models.numerics import NewtonSettings


@pytest.fixture
def rng():
    """Seeded generator so random levels are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def newton():
    """Default Newton settings."""
    return NewtonSettings()


@pytest.fixture
def small_grid():
    """Unit-step 3^3 interior grid."""
    return Grid3(n=3)


@pytest.fixture
def time_grid():
    """dt = 0.05 over 200 steps."""
    return TimeGrid(dt=0.05, steps=200)


@pytest.fixture
def sine_gordon():
    """Undamped sine-Gordon medium."""
    return MediumParams()


@pytest.fixture
def linear_medium():
    """Medium with a vanishing potential and unit mass."""
    return MediumParams(mass_sq=1.0, potential=PotentialKind.zero())
