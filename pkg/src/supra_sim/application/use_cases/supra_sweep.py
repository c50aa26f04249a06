"""Use case: amplitude sweep for the supratransmission threshold."""

import logging
import math
import time as clock
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any

from ...domain.exceptions import SimulationError
from ...domain.models.experiments import SweepSpec
from ...domain.models.reports import ExperimentResult
from ...domain.services.detectors import detect_jump
from ...domain.services.stability import check_cartesian
from ...infrastructure.persistence.csv_writer import SWEEP_COLUMNS
from .run_simulation import RunSimulationUseCase, enforce_stability

logger = logging.getLogger(__name__)


def sweep_point(spec: SweepSpec, amplitude: float) -> dict[str, Any]:
    """Run one amplitude; a failed run annotates its row instead of raising."""
    try:
        output = RunSimulationUseCase().execute(spec.run_spec(amplitude))
    except SimulationError as e:
        logger.warning(f"Sweep point A={amplitude} failed: {e.message}")
        return {
            "A": amplitude,
            "E_integrated": math.nan,
            "max_residual": math.nan,
            "status": f"failed: {e.message}",
            "u_site_max": math.nan,
        }
    logger.info(
        f"Sweep point A={amplitude}: E={output.series.integral:.6g}",
        extra={"amplitude": amplitude, "max_residual": output.max_residual},
    )
    return {
        "A": amplitude,
        "E_integrated": output.series.integral,
        "max_residual": output.max_residual,
        "status": "ok",
        "u_site_max": output.max_abs_site,
    }


def map_points(func, items: list[Any], threads: int) -> list[Any]:
    """Evaluate independent points, in a process pool when threads > 1."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(func, items))


def _usable_energy(row: dict[str, Any]) -> float | None:
    return row["E_integrated"] if row["status"] == "ok" else None


class SupraSweepUseCase:
    """Integrated site energy versus driving amplitude, with a jump detector."""

    def __init__(self, threads: int = 1, strict: bool = False):
        """Initialize use case.

        Args:
            threads: Worker processes for independent amplitudes
            strict: Reject a violated stability condition
        """
        self._threads = threads
        self._strict = strict

    def execute(self, spec: SweepSpec) -> ExperimentResult:
        """Execute the use case.

        Args:
            spec: Sweep specification

        Returns:
            One row per amplitude (A, E_integrated, max_residual, status) and
            the jump statistics in the metadata
        """
        report = check_cartesian(spec.medium, spec.grid, spec.dt)
        enforce_stability(report, self._strict, "Cartesian")

        started = clock.perf_counter()
        rows = map_points(partial(sweep_point, spec), list(spec.amplitudes), self._threads)
        rows.sort(key=lambda row: row["A"])

        jump = detect_jump(
            [row["A"] for row in rows],
            [_usable_energy(row) for row in rows],
            threshold=spec.jump_threshold,
            normalize_by_amplitude=spec.normalize_by_amplitude,
        )
        logger.info(
            f"Sweep finished in {clock.perf_counter() - started:.2f}s",
            extra={"threads": self._threads, "points": len(rows), "jumps": jump.jump_count},
        )

        return ExperimentResult(
            columns=list(SWEEP_COLUMNS),
            rows=rows,
            metadata={
                "omega": spec.omega,
                "t_end": spec.t_end,
                "dt": spec.dt,
                "n": spec.grid.n,
                "jump_threshold": spec.jump_threshold,
                "normalize_by_amplitude": spec.normalize_by_amplitude,
                "ratios": jump.ratios,
                "max_ratio": jump.max_ratio,
                "jump_location": jump.location,
                "jump_count": jump.jump_count,
                "unique_jump": jump.unique,
                "failed": [row["A"] for row in rows if row["status"] != "ok"],
            },
        )


def refine_threshold(
    spec: SweepSpec, lower: float, upper: float, iterations: int = 8
) -> tuple[float, float]:
    """Bisect a bracketing amplitude pair on the jump detector.

    A midpoint counts as transmitting when its normalized energy exceeds the
    lower bracket's by the jump threshold. The result is a bracket, not a
    certified threshold.

    Raises:
        ValueError: If the bracket is empty or its lower end failed
    """
    if not 0.0 < lower < upper:
        raise ValueError(f"Invalid bracket ({lower}, {upper})")

    def normalized(amplitude: float) -> float:
        row = sweep_point(spec, amplitude)
        if row["status"] != "ok":
            return math.inf
        return row["E_integrated"] / amplitude**2

    base = normalized(lower)
    if not math.isfinite(base) or base <= 0.0:
        raise ValueError(f"Lower bracket A={lower} gives no usable energy")

    for _ in range(iterations):
        middle = 0.5 * (lower + upper)
        if normalized(middle) >= spec.jump_threshold * base:
            upper = middle
        else:
            lower = middle
        logger.debug("Threshold bracket", extra={"lower": lower, "upper": upper})
    return lower, upper
