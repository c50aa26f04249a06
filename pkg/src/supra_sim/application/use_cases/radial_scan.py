"""Use case: radial energy over a grid of driving frequencies and amplitudes."""

import logging
import math
import time as clock
from dataclasses import dataclass, field
from functools import partial
from typing import Any

from ...domain.exceptions import SimulationError
from ...domain.models.experiments import ScanSpec
from ...domain.models.numerics import NewtonSettings
from ...domain.models.radial import RadialParams
from ...domain.models.reports import ExperimentResult
from ...domain.models.state import RadialState
from ...domain.services.damping import peak_damping
from ...domain.services.detectors import detect_jump
from ...domain.services.radial_energy import radial_rate_report
from ...domain.services.stability import check_radial
from ...infrastructure.factories import create_radial_stepper
from ...infrastructure.solvers.radial import initial_radial_state
from .run_simulation import enforce_stability
from .supra_sweep import map_points

logger = logging.getLogger(__name__)

SCAN_COLUMNS = ["omega", "A", "E_final", "E_integrated", "max_residual", "status"]


@dataclass
class RadialRunOutput:
    """Balanced radial energy sampled every step from t = 0."""

    times: list[float] = field(default_factory=list)
    energies: list[float] = field(default_factory=list)
    max_residual: float = 0.0
    max_printed_scaled_residual: float = 0.0
    final_state: RadialState | None = None

    @property
    def integral(self) -> float:
        if len(self.times) < 2:
            return 0.0
        dt = self.times[1] - self.times[0]
        return float(sum(self.energies) * dt)


def run_radial(
    params: RadialParams, dt: float, t_end: float, newton: NewtonSettings
) -> RadialRunOutput:
    """Step the radial problem through its warmup and up to t_end.

    Diagnostics are recorded only for t >= 0.
    """
    stepper = create_radial_stepper()
    state = initial_radial_state(params, dt)
    steps = max(1, math.ceil(t_end / dt - 1e-9))
    output = RadialRunOutput()

    while state.k < steps:
        advanced = stepper.step(state, newton)
        if state.k >= 0:
            report = radial_rate_report(
                state.prev, state.curr, advanced.curr, params, dt, tol=newton.tol_residual
            )
            output.times.append(state.t)
            output.energies.append(report.e_curr)
            output.max_residual = max(output.max_residual, report.residual)
            if report.printed_scaled_residual is not None:
                output.max_printed_scaled_residual = max(
                    output.max_printed_scaled_residual, report.printed_scaled_residual
                )
        state = advanced

    output.final_state = state
    return output


def scan_point(spec: ScanSpec, point: tuple[float, float]) -> dict[str, Any]:
    """Run one (omega, A) point; failures annotate the row."""
    omega, amplitude = point
    try:
        output = run_radial(spec.radial_params(omega, amplitude), spec.dt, spec.t_end, spec.newton)
    except SimulationError as e:
        logger.warning(f"Scan point omega={omega}, A={amplitude} failed: {e.message}")
        return {
            "omega": omega,
            "A": amplitude,
            "E_final": math.nan,
            "E_integrated": math.nan,
            "max_residual": math.nan,
            "status": f"failed: {e.message}",
        }
    return {
        "omega": omega,
        "A": amplitude,
        "E_final": output.energies[-1] if output.energies else 0.0,
        "E_integrated": output.integral,
        "max_residual": output.max_residual,
        "status": "ok",
    }


class RadialScanUseCase:
    """Radial energy surface over (omega, A) with a per-row smoothness statistic."""

    def __init__(self, threads: int = 1, strict: bool = False):
        self._threads = threads
        self._strict = strict

    def execute(self, spec: ScanSpec) -> ExperimentResult:
        """Execute the use case.

        Args:
            spec: Scan specification

        Returns:
            One row per (omega, A); per-omega smoothness in the metadata
        """
        radial = spec.radial
        gamma = peak_damping(radial.damping, radial.medium.gamma, radial.outer_radius)
        report = check_radial(radial.medium, radial.dr, spec.dt, gamma=gamma)
        enforce_stability(report, self._strict, "Radial")

        started = clock.perf_counter()
        points = [(w, a) for w in spec.omega_values for a in spec.amplitude_values]
        rows = map_points(partial(scan_point, spec), points, self._threads)
        rows.sort(key=lambda row: (row["omega"], row["A"]))

        smoothness: dict[str, dict[str, Any]] = {}
        for omega in spec.omega_values:
            line = [row for row in rows if row["omega"] == omega]
            energies = [row["E_integrated"] if row["status"] == "ok" else None for row in line]
            jump = detect_jump(
                [row["A"] for row in line],
                energies,
                threshold=spec.smooth_bound,
                normalize_by_amplitude=spec.normalize_by_amplitude,
            )
            usable = [e for e in energies if e is not None]
            smoothness[f"{omega:.17g}"] = {
                "max_ratio": jump.max_ratio,
                "smooth": jump.max_ratio is None or jump.max_ratio <= spec.smooth_bound,
                "monotone": all(b >= a for a, b in zip(usable, usable[1:], strict=False)),
            }

        logger.info(
            f"Radial scan finished in {clock.perf_counter() - started:.2f}s",
            extra={"threads": self._threads, "points": len(rows)},
        )
        return ExperimentResult(
            columns=list(SCAN_COLUMNS),
            rows=rows,
            metadata={
                "t_end": spec.t_end,
                "dt": spec.dt,
                "dr": spec.radial.dr,
                "epsilon": spec.radial.epsilon,
                "m_nodes": spec.radial.m_nodes,
                "potential": spec.radial.medium.potential.kind.value,
                "smooth_bound": spec.smooth_bound,
                "rows": smoothness,
            },
        )
