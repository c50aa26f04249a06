"""Use case: run one Cartesian simulation from rest."""

import logging
import time as clock
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ...domain.exceptions import StabilityViolationError, StepFailureError
from ...domain.models.experiments import RunSpec, SnapshotField
from ...domain.models.reports import SiteSeries, StabilityReport
from ...domain.models.state import FieldLevel, SimState3D
from ...domain.ports.stepper_port import TimeStepper
from ...domain.services.driving import eval_driving
from ...domain.services.energy import (
    energy_density_field,
    energy_rate_report,
    site_hamiltonian,
    total_energy,
)
from ...domain.services.stability import check_cartesian
from ...infrastructure.factories import create_stepper
from ...infrastructure.persistence.snapshot import write_snapshot
from ...infrastructure.solvers.cartesian import initial_state

logger = logging.getLogger(__name__)


@dataclass
class RunOutput:
    """Sampled diagnostics of one run.

    ``series`` holds H^k at the monitor site for every step; ``rows`` the
    sampled series columns, one per ``sample_every`` steps.
    """

    series: SiteSeries
    stability: StabilityReport
    rows: list[dict[str, float]] = field(default_factory=list)
    max_residual: float = 0.0
    max_relative_residual: float = 0.0
    max_abs_site: float = 0.0
    snapshots: list[Path] = field(default_factory=list)
    final_state: SimState3D | None = None

    @property
    def energies(self) -> list[float]:
        return [row["E_total"] for row in self.rows]


def enforce_stability(report: StabilityReport, strict: bool, label: str) -> None:
    """Warn about (or, when strict, reject) a violated necessary condition."""
    if report.satisfied:
        return
    message = (
        f"{label} stability condition violated: lhs {report.lhs:.6g} >= rhs {report.rhs:.6g}"
    )
    if report.note:
        message = f"{message} ({report.note})"
    if strict:
        raise StabilityViolationError(message)
    logger.warning(message, extra={"lhs": report.lhs, "rhs": report.rhs})


class RunSimulationUseCase:
    """Step a Cartesian medium and record its energy diagnostics."""

    def __init__(
        self,
        stepper: TimeStepper[SimState3D] | None = None,
        strict: bool = False,
        out_dir: Path | None = None,
    ):
        """Initialize use case.

        Args:
            stepper: Stepper to use; chosen from the run when omitted
            strict: Raise on a violated stability condition instead of warning
            out_dir: Directory for scheduled snapshots (none written when omitted)
        """
        self._stepper = stepper
        self._strict = strict
        self._out_dir = out_dir

    def _snapshot(
        self, out_dir: Path, spec: RunSpec, state: SimState3D, nxt: FieldLevel
    ) -> Path:
        t = state.t
        if spec.snapshot_field is SnapshotField.ENERGY:
            level = energy_density_field(state.curr, nxt, spec.medium, spec.grid, spec.time)
        else:
            level = state.curr
        path = out_dir / f"snapshot_{spec.snapshot_field.value}_{state.k:08d}.nlw3"
        return write_snapshot(path, level, spec.grid.steps, t)

    def execute(
        self,
        spec: RunSpec,
        displacement: FieldLevel | None = None,
        velocity: FieldLevel | None = None,
        first_level: FieldLevel | None = None,
    ) -> RunOutput:
        """Execute the use case.

        Args:
            spec: Run specification
            displacement: Initial field (rest by default)
            velocity: Initial velocity
            first_level: Exact level u^1

        Returns:
            Run diagnostics

        Raises:
            StabilityViolationError: If strict and the stability condition fails
            StepFailureError: If a step does not converge
        """
        dt = spec.time.dt
        report = check_cartesian(spec.medium, spec.grid, dt)
        enforce_stability(report, self._strict, "Cartesian")

        stepper = self._stepper or create_stepper(spec)
        newton = spec.newton
        site = spec.site
        state = initial_state(
            spec.medium,
            spec.grid,
            spec.time,
            spec.damping,
            spec.signal,
            displacement=displacement,
            velocity=velocity,
            first_level=first_level,
        )

        output = RunOutput(series=SiteSeries(site=site, dt=dt), stability=report)
        output.series.append(
            0.0,
            site_hamiltonian(state.prev, state.curr, site, spec.medium, spec.grid, spec.time),
        )
        e_zero = total_energy(state.prev, state.curr, spec.medium, spec.grid, spec.time)
        output.max_abs_site = abs(float(state.prev[site]))

        out_dir = self._out_dir
        pending = sorted(spec.snapshot_times) if out_dir is not None else []
        started = clock.perf_counter()
        logger.info(
            f"Run started: {stepper.name}, N={spec.grid.n}, dt={dt}, steps={spec.time.steps}",
            extra={"amplitude": spec.signal.amplitude, "site": site},
        )

        while state.k < spec.time.steps:
            try:
                advanced = stepper.step(state, newton)
            except StepFailureError as e:
                logger.error(f"Run aborted at step {e.step}: {e.message}")
                raise

            k = state.k
            t = state.t
            h_site = site_hamiltonian(
                state.curr, advanced.curr, site, spec.medium, spec.grid, spec.time
            )
            output.series.append(t, h_site)
            u_site = float(state.curr[site])
            output.max_abs_site = max(output.max_abs_site, abs(u_site))

            if k % spec.sample_every == 0 or advanced.k == spec.time.steps:
                energy = energy_rate_report(
                    state.prev,
                    state.curr,
                    advanced.curr,
                    spec.medium,
                    spec.grid,
                    spec.time,
                    gamma_field=state.gamma_field,
                    tol=newton.tol_residual,
                )
                output.rows.append(
                    {
                        "t": t,
                        "u_site": u_site,
                        "H_site": h_site,
                        "E_total": energy.e_curr,
                        "rate_lhs": energy.rate_lhs,
                        "rate_rhs": energy.rate_rhs,
                        "residual": energy.residual,
                        "phi": eval_driving(spec.signal, t),
                    }
                )
                output.max_residual = max(output.max_residual, energy.residual)
                output.max_relative_residual = max(
                    output.max_relative_residual, energy.relative_residual
                )

            while pending and pending[0] <= t + 0.5 * dt:
                if out_dir is not None and abs(pending[0] - t) <= 0.5 * dt:
                    output.snapshots.append(self._snapshot(out_dir, spec, state, advanced.curr))
                pending.pop(0)

            state = advanced

        output.final_state = state
        logger.info(
            f"Run finished in {clock.perf_counter() - started:.2f}s",
            extra={
                "e_initial": e_zero,
                "max_residual": output.max_residual,
                "integral": output.series.integral,
                "finite": bool(np.all(np.isfinite(state.curr))),
            },
        )
        return output
