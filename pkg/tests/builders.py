"""Builders for levels and states shared by the unit tests."""

import numpy as np

from src.supra_sim.domain.models.damping import DampingProfile
from src.supra_sim.domain.models.driving import DrivingSignal
from src.supra_sim.domain.models.grid import Grid3, TimeGrid
from src.supra_sim.domain.models.medium import MediumParams
from src.supra_sim.domain.models.radial import RadialParams
from src.supra_sim.domain.models.state import SimState3D
from src.supra_sim.domain.services.cartesian_scheme import apply_boundaries


def random_level(rng, grid: Grid3, scale: float = 0.3, phi: float = 0.0) -> np.ndarray:
    """Random level with its boundary layers applied."""
    level = rng.uniform(-scale, scale, grid.shape)
    return apply_boundaries(level, phi)


def make_state(
    prev: np.ndarray,
    curr: np.ndarray,
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
    signal: DrivingSignal | None = None,
    damping: DampingProfile | None = None,
    k: int = 1,
) -> SimState3D:
    """State at step k holding the given levels."""
    return SimState3D(
        prev=prev,
        curr=curr,
        k=k,
        params=params,
        grid=grid,
        time=time,
        damping=damping or DampingProfile.uniform(),
        signal=signal or DrivingSignal(),
    )


def small_radial(m_nodes: int = 8, **medium) -> RadialParams:
    """Radial problem on a short grid, undriven unless a signal is given."""
    signal = medium.pop("signal", DrivingSignal())
    damping = medium.pop("damping", DampingProfile.uniform())
    return RadialParams(
        epsilon=0.02,
        dr=0.02,
        m_nodes=m_nodes,
        medium=MediumParams(**medium),
        damping=damping,
        signal=signal,
    )
