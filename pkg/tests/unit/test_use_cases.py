"""Tests for the application use cases."""

import math

import pytest

from src.supra_sim.application.use_cases.check_stability import CheckStabilityUseCase
from src.supra_sim.application.use_cases.radial_scan import (
    SCAN_COLUMNS,
    RadialScanUseCase,
    run_radial,
)
from src.supra_sim.application.use_cases.run_simulation import RunSimulationUseCase
from src.supra_sim.application.use_cases.supra_sweep import (
    SupraSweepUseCase,
    map_points,
    refine_threshold,
)
from src.supra_sim.application.use_cases.transmit_bits import TransmitBitsUseCase
from src.supra_sim.domain.exceptions import StabilityViolationError, StepFailureError
from src.supra_sim.domain.models.driving import DrivingSignal
from src.supra_sim.domain.models.experiments import (
    BitSignalSpec,
    RunSpec,
    ScanSpec,
    SnapshotField,
    SweepSpec,
)
from src.supra_sim.domain.models.grid import Grid3, TimeGrid
from src.supra_sim.domain.models.medium import MediumParams
from src.supra_sim.domain.models.radial import RadialParams
from src.supra_sim.infrastructure.persistence import SWEEP_COLUMNS, read_snapshot
from tests.builders import small_radial


def _sweep(amplitudes, **kwargs) -> SweepSpec:
    return SweepSpec(
        omega=0.9, amplitudes=amplitudes, t_end=1.0, dt=0.05, grid=Grid3(n=3), **kwargs
    )


class TestRunSimulationUseCase:
    """Tests for RunSimulationUseCase."""

    def test_undriven_run_is_silent(self):
        """Test that A = 0 leaves every diagnostic at zero."""
        spec = RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.05, steps=40))
        output = RunSimulationUseCase().execute(spec)

        assert len(output.series.hamiltonian) == 40
        assert all(h == 0.0 for h in output.series.hamiltonian)
        assert output.series.integral == 0.0
        assert output.max_abs_site == 0.0
        assert all(e == 0.0 for e in output.energies)

    def test_sampled_rows(self):
        """Test one row per sample_every steps plus the last step."""
        spec = RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.05, steps=40), sample_every=10)
        output = RunSimulationUseCase().execute(spec)
        assert [row["t"] for row in output.rows] == pytest.approx([0.5, 1.0, 1.5, 1.95])

    def test_driven_run_balances(self):
        """Test the energy identity across a driven, damped run."""
        spec = RunSpec(
            medium=MediumParams(beta=0.1, gamma=0.05),
            grid=Grid3(n=3),
            time=TimeGrid(dt=0.05, steps=60),
            signal=DrivingSignal.ramped_sine(1.0, 0.9, ramp_periods=0.5),
        )
        output = RunSimulationUseCase().execute(spec)
        assert output.max_abs_site > 0.0
        assert output.max_relative_residual <= 1e-10
        assert output.series.integral != 0.0

    def test_strict_stability(self):
        """Test that a violated condition aborts in strict mode."""
        spec = RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.6, steps=5))
        with pytest.raises(StabilityViolationError) as exc_info:
            RunSimulationUseCase(strict=True).execute(spec)
        assert exc_info.value.exit_code == 2

    def test_lenient_stability_warns(self, caplog):
        """Test that a violated condition only warns by default."""
        spec = RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.6, steps=3))
        RunSimulationUseCase().execute(spec)
        assert "stability condition violated" in caplog.text

    def test_snapshot_schedule(self, tmp_path):
        """Test that a scheduled time writes one energy snapshot."""
        spec = RunSpec(
            grid=Grid3(n=3),
            time=TimeGrid(dt=0.05, steps=40),
            snapshot_times=(0.5,),
            snapshot_field=SnapshotField.ENERGY,
        )
        output = RunSimulationUseCase(out_dir=tmp_path).execute(spec)

        assert len(output.snapshots) == 1
        header, values = read_snapshot(output.snapshots[0])
        assert header.t == pytest.approx(0.5)
        assert values.shape == (3, 3, 3)

    def test_step_failure_propagates(self, mocker):
        """Test that a failed step aborts the run."""
        stepper = mocker.Mock()
        stepper.name = "mock"
        stepper.step.side_effect = StepFailureError(
            step=2, site=5, last_residual=1.0, iterations=1
        )
        spec = RunSpec(grid=Grid3(n=3), time=TimeGrid(dt=0.05, steps=5))
        with pytest.raises(StepFailureError):
            RunSimulationUseCase(stepper=stepper).execute(spec)


class TestSupraSweepUseCase:
    """Tests for SupraSweepUseCase."""

    def test_zero_amplitude(self):
        """Test that the undriven point has zero energy and no jump."""
        result = SupraSweepUseCase().execute(_sweep((0.0,)))
        assert result.columns == SWEEP_COLUMNS
        assert result.rows[0]["E_integrated"] == 0.0
        assert result.rows[0]["status"] == "ok"
        assert result.metadata["jump_count"] == 0
        assert result.metadata["max_ratio"] is None
        assert result.metadata["failed"] == []

    def test_failed_point_is_annotated(self, mocker):
        """Test that a failing amplitude becomes a NaN row."""
        mocker.patch(
            "src.supra_sim.application.use_cases.supra_sweep.RunSimulationUseCase.execute",
            side_effect=StepFailureError(step=3, site=7, last_residual=0.5, iterations=50),
        )
        result = SupraSweepUseCase().execute(_sweep((0.5, 1.0)))
        assert all(math.isnan(row["E_integrated"]) for row in result.rows)
        assert result.rows[0]["status"].startswith("failed")
        assert result.metadata["failed"] == [0.5, 1.0]

    def test_strict_stability(self):
        """Test that a sweep with an unstable dt aborts in strict mode."""
        spec = SweepSpec(omega=0.9, amplitudes=(1.0,), t_end=1.0, dt=0.6, grid=Grid3(n=3))
        with pytest.raises(StabilityViolationError):
            SupraSweepUseCase(strict=True).execute(spec)

    def test_refine_rejects_empty_bracket(self):
        """Test that the bracket must be ordered and positive."""
        with pytest.raises(ValueError, match="Invalid bracket"):
            refine_threshold(_sweep((1.0,)), 2.0, 1.0)

    def test_map_points_serial(self):
        """Test the in-process path."""
        assert map_points(abs, [-1, -2, 3], threads=1) == [1, 2, 3]


class TestRadialScanUseCase:
    """Tests for RadialScanUseCase."""

    def _spec(self, amplitudes) -> ScanSpec:
        return ScanSpec(
            omega_values=(0.9,),
            amplitude_values=amplitudes,
            radial=small_radial(10),
            dt=0.01,
            t_end=0.2,
            ramp_periods=0.25,
        )

    def test_zero_amplitude_row(self):
        """Test that an undriven point yields zero energy and a smooth row."""
        result = RadialScanUseCase().execute(self._spec((0.0,)))
        assert result.columns == SCAN_COLUMNS
        row = result.rows[0]
        assert row["E_final"] == 0.0
        assert row["E_integrated"] == 0.0
        assert row["status"] == "ok"

        stats = result.metadata["rows"][f"{0.9:.17g}"]
        assert stats["max_ratio"] is None
        assert stats["smooth"] is True

    def test_run_records_from_zero(self, newton):
        """Test that warmup steps are not recorded."""
        spec = self._spec((0.5,))
        output = run_radial(spec.radial_params(0.9, 0.5), spec.dt, spec.t_end, newton)
        assert output.times[0] == pytest.approx(0.0)
        assert len(output.times) == 20
        assert output.max_residual <= 1e-8

    def test_strict_boundary_case(self):
        """Test that dt = dr is rejected in strict mode."""
        spec = ScanSpec(
            omega_values=(0.9,), amplitude_values=(0.5,), radial=small_radial(10), dt=0.02
        )
        with pytest.raises(StabilityViolationError):
            RadialScanUseCase(strict=True).execute(spec)

    def test_strict_absorbing_profile(self):
        """Test that dt = dr passes strict mode once the absorbing layer is counted."""
        spec = ScanSpec(
            omega_values=(0.9,),
            amplitude_values=(1.0,),
            radial=RadialParams(m_nodes=10),
            dt=0.02,
            t_end=0.1,
        )
        result = RadialScanUseCase(strict=True).execute(spec)
        assert result.rows[0]["status"] == "ok"


class TestTransmitBitsUseCase:
    """Tests for TransmitBitsUseCase."""

    def test_zero_bits(self):
        """Test that an all-zero sequence produces no peaks."""
        spec = BitSignalSpec(
            bits=(0, 0, 0, 0),
            period=2 * math.pi / 0.9,
            amp_factor=1.0,
            omega=0.9,
            dt=0.05,
            grid=Grid3(n=3),
        )
        result = TransmitBitsUseCase().execute(spec)
        assert result.metadata["count"] == 0
        assert result.rows == []


class TestCheckStabilityUseCase:
    """Tests for CheckStabilityUseCase."""

    def test_both_reports(self):
        """Test the Cartesian and radial reports together."""
        reports = CheckStabilityUseCase().execute(
            MediumParams(), Grid3(n=4), 0.05, radial_dr=0.02, radial_dt=0.02
        )
        assert reports["cartesian"].satisfied
        assert not reports["radial"].satisfied

    def test_cartesian_only(self):
        """Test that the radial report is skipped without a radial step."""
        reports = CheckStabilityUseCase().execute(MediumParams(), Grid3(n=4), 0.05)
        assert list(reports) == ["cartesian"]

    def test_radial_profile_maximum(self):
        """Test that dt = dr is satisfied with the absorbing layer's peak damping."""
        reports = CheckStabilityUseCase().execute(
            MediumParams(), None, 0.05, radial_dr=0.02, radial_dt=0.02, radial_gamma=1.0
        )
        assert reports["radial"].satisfied
        assert reports["radial"].rhs >= 1.005
