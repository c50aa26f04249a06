"""Use case: evaluate the necessary stability conditions of a configuration."""

import logging

from ...domain.models.grid import Grid3
from ...domain.models.medium import MediumParams
from ...domain.models.reports import StabilityReport
from ...domain.services.stability import check_cartesian, check_radial

logger = logging.getLogger(__name__)


class CheckStabilityUseCase:
    """Report the Cartesian condition and, when requested, the radial one."""

    def execute(
        self,
        medium: MediumParams,
        grid: Grid3 | None,
        dt: float,
        radial_dr: float | None = None,
        radial_dt: float | None = None,
        radial_gamma: float | None = None,
    ) -> dict[str, StabilityReport]:
        """Execute the use case.

        Args:
            medium: Medium coefficients
            grid: Cartesian grid (skipped when None)
            dt: Cartesian time step
            radial_dr: Radial step (skipped when None)
            radial_dt: Radial time step (defaults to dt)
            radial_gamma: Largest damping of the radial profile (defaults to medium.gamma)

        Returns:
            Reports keyed by "cartesian" and "radial"
        """
        reports: dict[str, StabilityReport] = {}
        if grid is not None:
            reports["cartesian"] = check_cartesian(medium, grid, dt)
        if radial_dr is not None:
            reports["radial"] = check_radial(
                medium, radial_dr, radial_dt or dt, gamma=radial_gamma
            )

        for name, report in reports.items():
            level = logging.INFO if report.satisfied else logging.WARNING
            logger.log(
                level,
                f"{name} stability: lhs={report.lhs:.6g} rhs={report.rhs:.6g} "
                f"satisfied={report.satisfied}",
            )
        return reports
