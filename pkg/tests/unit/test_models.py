"""Tests for domain models."""

import math

import pytest
from pydantic import ValidationError

from src.supra_sim.domain.models.damping import DampingKind, DampingProfile
from src.supra_sim.domain.models.driving import DrivingSignal, SignalKind
from src.supra_sim.domain.models.experiments import (
    BitSignalSpec,
    RunSpec,
    ScanSpec,
    SnapshotField,
    SolverKind,
    SweepSpec,
)
from src.supra_sim.domain.models.grid import Grid3, TimeGrid
from src.supra_sim.domain.models.medium import MediumParams, PotentialKind, PotentialName
from src.supra_sim.domain.models.radial import RadialParams
from src.supra_sim.domain.models.reports import EnergyReport, SiteSeries, StabilityReport


class TestPotentialKind:
    """Tests for PotentialKind."""

    def test_landau_ginzburg_requires_lambda(self):
        """Test that Landau-Ginzburg without lambda is rejected."""
        with pytest.raises(ValidationError, match="requires lambda > 0"):
            PotentialKind(kind=PotentialName.LANDAU_GINZBURG)

    def test_lambda_rejected_for_sine_gordon(self):
        """Test that lambda is only accepted for Landau-Ginzburg."""
        with pytest.raises(ValidationError, match="only valid for landau_ginzburg"):
            PotentialKind(kind=PotentialName.SINE_GORDON, lam=1.0)

    def test_lambda_alias(self):
        """Test loading lambda under its JSON name."""
        kind = PotentialKind.model_validate({"kind": "landau_ginzburg", "lambda": 0.5})
        assert kind.lam == 0.5


class TestMediumParams:
    """Tests for MediumParams."""

    def test_defaults(self):
        """Test the undamped sine-Gordon default."""
        medium = MediumParams()
        assert medium.beta == 0.0
        assert medium.coupling == 1.0
        assert medium.potential.kind is PotentialName.SINE_GORDON

    def test_negative_beta_rejected(self):
        """Test that a negative internal damping names the field."""
        with pytest.raises(ValidationError) as exc_info:
            MediumParams(beta=-0.1)
        assert exc_info.value.errors()[0]["loc"] == ("beta",)

    def test_non_finite_rejected(self):
        """Test that infinite coefficients are rejected."""
        with pytest.raises(ValidationError, match="must be finite"):
            MediumParams(mass_sq=math.inf)

    def test_gap_edge(self):
        """Test the band-gap edge sqrt(m^2 + 1)."""
        assert MediumParams(mass_sq=3.0).gap_edge == pytest.approx(2.0)
        assert MediumParams(mass_sq=-2.0).gap_edge == 0.0


class TestGrids:
    """Tests for Grid3 and TimeGrid."""

    def test_storage_shape(self):
        """Test that a level stores (N+2)^3 values."""
        grid = Grid3(n=4)
        assert grid.shape == (6, 6, 6)
        assert grid.interior_shape == (4, 4, 4)

    def test_r_sq(self):
        """Test R^2 for unequal steps."""
        grid = Grid3(n=2, dx=1.0, dy=0.5, dz=0.25)
        assert grid.r_sq == pytest.approx(1.0 + 4.0 + 16.0)
        assert not grid.equal_steps

    def test_zero_nodes_rejected(self):
        """Test that N must be positive."""
        with pytest.raises(ValidationError):
            Grid3(n=0)

    def test_covering(self):
        """Test the smallest time grid reaching t_end."""
        time = TimeGrid.covering(0.05, 100.0)
        assert time.steps == 2000
        assert time.t_end == pytest.approx(100.0)


class TestDrivingSignal:
    """Tests for DrivingSignal."""

    def test_ramped_sine_ramp_in_periods(self):
        """Test that the ramp is counted in driving periods."""
        signal = DrivingSignal.ramped_sine(1.0, 0.9, ramp_periods=10.0)
        assert signal.ramp_duration == pytest.approx(10.0 * 2.0 * math.pi / 0.9)
        assert signal.warmup == 0.0

    def test_warmup_equals_ramp(self):
        """Test that a warmup places the whole ramp before t = 0."""
        signal = DrivingSignal.ramped_sine(1.0, 0.9, ramp_periods=2.0, warmup=True)
        assert signal.warmup == signal.ramp_duration

    def test_bits_rejected_for_ramped_sine(self):
        """Test the exclusivity of bit fields."""
        with pytest.raises(ValidationError, match="require kind=bit_sequence"):
            DrivingSignal(kind=SignalKind.RAMPED_SINE, bits=(1, 0))

    def test_bit_values(self):
        """Test that bits must be 0 or 1."""
        with pytest.raises(ValidationError, match="bits must be 0 or 1"):
            DrivingSignal.bit_sequence([1, 2], 0.9, 150.0, 3.0)

    def test_bit_sequence_requires_period(self):
        """Test that a bit sequence needs period and amp_factor."""
        with pytest.raises(ValidationError, match="requires period and amp_factor"):
            DrivingSignal(kind=SignalKind.BIT_SEQUENCE, bits=(1,), frequency=0.9)

    def test_duration(self):
        """Test the span covered by the bit windows."""
        signal = DrivingSignal.bit_sequence([1, 0, 1], 0.9, 150.0, 3.0)
        assert signal.duration == pytest.approx(450.0)

    def test_off_grid_period_warns(self, caplog):
        """Test that P = 150 with omega = 0.9 is accepted with a warning."""
        with caplog.at_level("WARNING"):
            signal = DrivingSignal.bit_sequence([1, 0], 0.9, 150.0, 3.0)
        assert signal.period == 150.0
        assert "whole number of driving periods" in caplog.text

    def test_whole_period_silent(self, caplog):
        """Test that a multiple of 2 pi / omega passes without a warning."""
        with caplog.at_level("WARNING"):
            DrivingSignal.bit_sequence([1, 0], 0.9, 21 * 2.0 * math.pi / 0.9, 3.0)
        assert "whole number of driving periods" not in caplog.text


class TestDampingProfile:
    """Tests for DampingProfile."""

    def test_lattice_requires_n0(self):
        """Test that the lattice profile needs n0."""
        with pytest.raises(ValidationError, match="requires n0"):
            DampingProfile(kind=DampingKind.LATTICE_ABSORBING)

    def test_radial_defaults(self):
        """Test the radial absorbing defaults."""
        profile = DampingProfile.radial()
        assert (profile.center, profile.width_factor, profile.onset) == (5.5, 8.0, 5.0)


class TestRadialParams:
    """Tests for RadialParams."""

    def test_default_reaches_six(self):
        """Test that the default grid ends at L = 6."""
        params = RadialParams()
        assert params.outer_radius == pytest.approx(6.0)
        assert params.size == 300

    def test_nodes_for(self):
        """Test the interior node count for a target radius."""
        assert RadialParams.nodes_for(0.02, 0.02, 6.0) == 298


class TestRunSpec:
    """Tests for RunSpec."""

    def test_default_site_is_centre(self):
        """Test that the monitor site defaults to the cube centre."""
        spec = RunSpec(grid=Grid3(n=5), time=TimeGrid(dt=0.05, steps=1))
        assert spec.site == (3, 3, 3)

    def test_site_out_of_range(self):
        """Test that a boundary monitor site is rejected."""
        with pytest.raises(ValidationError, match="not interior"):
            RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.05, steps=1), monitor_site=(0, 1, 1))

    def test_lattice_requires_unit_steps(self):
        """Test that lattice mode needs unit spatial steps."""
        with pytest.raises(ValidationError, match="lattice mode requires"):
            RunSpec(grid=Grid3(n=3, dx=0.5), time=TimeGrid(dt=0.05, steps=1), lattice=True)

    def test_explicit_requires_zero_beta(self):
        """Test that the explicit solver rejects internal damping."""
        with pytest.raises(ValidationError, match="requires beta = 0"):
            RunSpec(
                grid=Grid3(n=3),
                time=TimeGrid(dt=0.05, steps=1),
                medium=MediumParams(beta=0.1),
                solver=SolverKind.EXPLICIT,
            )


class TestSweepSpec:
    """Tests for SweepSpec."""

    def test_amplitudes_must_increase(self):
        """Test that unordered amplitudes are rejected."""
        with pytest.raises(ValidationError, match="strictly increasing"):
            SweepSpec(omega=0.9, amplitudes=(1.0, 0.5), t_end=10.0, dt=0.05, grid=Grid3(n=3))

    def test_frequency_outside_gap(self):
        """Test that a frequency above the band-gap edge is rejected."""
        with pytest.raises(ValidationError, match="forbidden band-gap"):
            SweepSpec(omega=1.2, amplitudes=(1.0,), t_end=10.0, dt=0.05, grid=Grid3(n=3))

    def test_run_spec(self):
        """Test the run built for one amplitude."""
        spec = SweepSpec(omega=0.9, amplitudes=(0.5, 1.0), t_end=100.0, dt=0.05, grid=Grid3(n=3))
        run = spec.run_spec(1.0)
        assert run.time.steps == 2000
        assert run.sample_every == 20
        assert run.signal.amplitude == 1.0
        assert run.signal.frequency == 0.9


class TestScanSpec:
    """Tests for ScanSpec."""

    def test_landau_ginzburg_rejected(self):
        """Test that radial scans only accept sine-Gordon and Klein-Gordon."""
        medium = MediumParams(potential=PotentialKind.landau_ginzburg(1.0))
        with pytest.raises(ValidationError, match="radial scans support"):
            ScanSpec(
                omega_values=(0.9,),
                amplitude_values=(1.0,),
                radial=RadialParams(m_nodes=8, medium=medium),
            )

    def test_omega_values_must_increase(self):
        """Test that the error names the offending list."""
        with pytest.raises(ValidationError, match="omega_values must be strictly increasing"):
            ScanSpec(omega_values=(0.9, 0.9), amplitude_values=(1.0,))

    def test_point_uses_warmup(self):
        """Test that scan points ramp before t = 0."""
        spec = ScanSpec(omega_values=(0.9,), amplitude_values=(2.0,))
        params = spec.radial_params(0.9, 2.0)
        assert params.signal.amplitude == 2.0
        assert params.signal.warmup == pytest.approx(2.0 * 2.0 * math.pi / 0.9)


class TestBitSignalSpec:
    """Tests for BitSignalSpec."""

    def test_duration_defaults_to_bits(self):
        """Test that the run covers every bit window by default."""
        spec = BitSignalSpec(
            bits=(1, 1, 1, 1), period=150.0, amp_factor=3.0, omega=0.9, dt=0.05, grid=Grid3(n=3)
        )
        assert spec.duration == pytest.approx(600.0)
        run = spec.run_spec()
        assert run.lattice
        assert run.time.steps == 12000
        assert run.snapshot_field is SnapshotField.ENERGY

    def test_empty_bits_rejected(self):
        """Test that at least one bit is required."""
        with pytest.raises(ValidationError):
            BitSignalSpec(
                bits=(), period=150.0, amp_factor=3.0, omega=0.9, dt=0.05, grid=Grid3(n=3)
            )


class TestReports:
    """Tests for report containers."""

    def test_stability_margin(self):
        """Test that equality is not satisfied."""
        assert not StabilityReport(lhs=4.0, rhs=4.0).satisfied
        assert StabilityReport(lhs=0.03, rhs=4.0).margin == pytest.approx(3.97)

    def test_relative_residual(self):
        """Test the residual scaled by the energy magnitude."""
        report = EnergyReport(e_curr=10.0, e_prev=9.0, rate_lhs=20.0, rate_rhs=19.0, residual=1.0)
        assert report.relative_residual == pytest.approx(0.05)

    def test_series_integral(self):
        """Test the left Riemann sum of the site series."""
        series = SiteSeries(site=(1, 1, 1), dt=0.5)
        for t, h in [(0.0, 1.0), (0.5, 2.0), (1.0, 3.0)]:
            series.append(t, h)
        assert series.integral == pytest.approx(3.0)
