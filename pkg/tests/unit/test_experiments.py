"""Desk-scale experiment runs. Deselected by default; run with ``-m slow``."""

import numpy as np
import pytest

from src.supra_sim.application.use_cases.radial_scan import RadialScanUseCase
from src.supra_sim.application.use_cases.supra_sweep import SupraSweepUseCase
from src.supra_sim.application.use_cases.transmit_bits import TransmitBitsUseCase
from src.supra_sim.domain.models.damping import DampingProfile
from src.supra_sim.domain.models.driving import DrivingSignal
from src.supra_sim.domain.models.experiments import BitSignalSpec, ScanSpec, SweepSpec
from src.supra_sim.domain.models.grid import Grid3, TimeGrid
from src.supra_sim.domain.models.medium import MediumParams, PotentialKind
from src.supra_sim.domain.models.radial import RadialParams
from src.supra_sim.domain.services.cartesian_scheme import apply_boundaries
from src.supra_sim.domain.services.energy import total_energy
from src.supra_sim.infrastructure.solvers.cartesian import initial_state, step_explicit
from tests.builders import random_level

pytestmark = pytest.mark.slow

DESK = Grid3(n=50)
MEDIUM = MediumParams(gamma=0.005, josephson=0.01)
SITE = (15, 15, 15)


class TestConservationAtScale:
    """Tests for energy conservation on a 16^3 grid."""

    def test_thousand_steps(self, rng, newton):
        """Test the relative drift of an undamped, undriven run."""
        grid = Grid3(n=16)
        time = TimeGrid(dt=0.05, steps=1000)
        medium = MediumParams()
        start = random_level(rng, grid, scale=0.05)
        wave = np.sin(np.pi * np.arange(grid.size) / (grid.size - 1))
        start += 0.5 * wave[:, None, None] * wave[None, :, None] * wave[None, None, :]
        apply_boundaries(start, 0.0)
        state = initial_state(
            medium, grid, time, DampingProfile.uniform(), DrivingSignal(), displacement=start
        )
        e_zero = total_energy(state.prev, state.curr, medium, grid, time)
        while state.k < time.steps:
            state = step_explicit(state, newton)
        e_end = total_energy(state.prev, state.curr, medium, grid, time)
        assert abs(e_end - e_zero) <= 1e-8 * max(1.0, abs(e_zero))


class TestSupratransmission:
    """Tests for the amplitude sweep on the desk-scale lattice."""

    @pytest.mark.parametrize(
        "medium", [MediumParams(), MEDIUM], ids=["all_coefficients_zero", "damped_josephson"]
    )
    def test_unique_jump(self, medium):
        """Test exactly one adjacent ratio >= 3 for A in [1.2, 1.7]."""
        spec = SweepSpec(
            omega=0.9,
            amplitudes=tuple(np.round(np.arange(1.2, 1.7001, 0.05), 2)),
            t_end=100.0,
            dt=0.05,
            grid=DESK,
            medium=medium,
            damping=DampingProfile.lattice(n0=15),
            monitor_site=SITE,
            lattice=True,
        )
        result = SupraSweepUseCase(threads=4).execute(spec)
        assert result.metadata["failed"] == []
        assert result.metadata["unique_jump"]

        low, high = result.metadata["jump_location"]
        site_max = {row["A"]: row["u_site_max"] for row in result.rows}
        assert site_max[high] >= 2.0 * site_max[low]


class TestRadialSmoothness:
    """Tests for the radial scan over amplitude."""

    @pytest.mark.parametrize(
        "potential", [PotentialKind.sine_gordon(), PotentialKind.klein_gordon()]
    )
    def test_no_jump(self, potential):
        """Test adjacent ratios <= 1.5 and a nondecreasing energy for A = 0..20."""
        spec = ScanSpec(
            omega_values=(0.9,),
            amplitude_values=tuple(float(a) for a in range(21)),
            radial=RadialParams(medium=MediumParams(potential=potential)),
            dt=0.02,
            t_end=20.0,
        )
        result = RadialScanUseCase(threads=4).execute(spec)
        stats = result.metadata["rows"][f"{0.9:.17g}"]
        assert stats["smooth"]
        assert stats["monotone"]


class TestBitTransmission:
    """Tests for bit-sequence transmission through the desk-scale cube."""

    def _spec(self, bits) -> BitSignalSpec:
        return BitSignalSpec(
            bits=bits,
            period=150.0,
            amp_factor=3.0,
            omega=0.9,
            dt=0.01,
            grid=DESK,
            medium=MEDIUM,
            damping=DampingProfile.lattice(n0=15),
            monitor_site=SITE,
        )

    def test_four_ones(self):
        """Test four peaks about one period apart."""
        result = TransmitBitsUseCase().execute(self._spec((1, 1, 1, 1)))
        assert result.metadata["count"] == 4
        for spacing in result.metadata["spacings"]:
            assert spacing == pytest.approx(150.0, rel=0.1)

    def test_gap_in_sequence(self):
        """Test that a zero bit leaves a double gap."""
        result = TransmitBitsUseCase().execute(self._spec((1, 0, 1)))
        assert result.metadata["count"] == 2
        assert result.metadata["spacings"][0] == pytest.approx(300.0, rel=0.1)
