"""Necessary stability conditions of the Cartesian and radial schemes.

Both checks assume a linear medium (V' = 0, J = 0). Equality is reported as a
violation because the conditions are strict inequalities.
"""

import logging

from ..models.grid import Grid3
from ..models.medium import MediumParams
from ..models.reports import StabilityReport

logger = logging.getLogger(__name__)

BOUNDARY_NOTE = "boundary case: lhs equals rhs, the condition requires strict inequality"


def _note(lhs: float, rhs: float) -> str:
    return BOUNDARY_NOTE if lhs == rhs else ""


def check_cartesian(params: MediumParams, grid: Grid3, dt: float) -> StabilityReport:
    """Evaluate 4 c^2 R^2 dt^2 - 4 R^2 beta dt - (gamma + m^2 dt) dt < 4.

    With c = 1 this is the condition for the checkerboard mode of the scheme;
    for equal steps the corollary form (12 R^2 - m^2) dt^2 - (gamma + 12 beta R^2) dt
    is reported as well, with R = 1/dx.

    Args:
        params: Medium coefficients
        grid: Spatial grid
        dt: Time step

    Returns:
        Stability report with lhs, rhs = 4 and R^2
    """
    r_sq = grid.r_sq
    c_sq = params.coupling**2
    lhs = 4.0 * r_sq * (c_sq * dt**2 - params.beta * dt) - (params.gamma + params.mass_sq * dt) * dt
    rhs = 4.0

    corollary = None
    if grid.equal_steps:
        r_axis_sq = 1.0 / grid.dx**2
        corollary = (12.0 * c_sq * r_axis_sq - params.mass_sq) * dt**2 - (
            params.gamma + 12.0 * params.beta * r_axis_sq
        ) * dt

    report = StabilityReport(
        lhs=lhs, rhs=rhs, r_sq=r_sq, corollary_lhs=corollary, note=_note(lhs, rhs)
    )
    logger.debug(
        "Cartesian stability check",
        extra={"lhs": lhs, "rhs": rhs, "dt": dt, "satisfied": report.satisfied},
    )
    return report


def check_radial(
    params: MediumParams, dr: float, dt: float, gamma: float | None = None
) -> StabilityReport:
    """Evaluate (dt/dr)^2 < 1 + gamma dt/4 + beta dt/dr^2 + m^2 dt^2/4.

    Args:
        params: Medium coefficients
        dr: Radial step
        dt: Time step
        gamma: Damping value to use instead of the baseline (e.g. a profile maximum)

    Returns:
        Stability report
    """
    g = params.gamma if gamma is None else gamma
    lhs = (dt / dr) ** 2
    rhs = 1.0 + g * dt / 4.0 + params.beta * dt / dr**2 + params.mass_sq * dt**2 / 4.0
    return StabilityReport(lhs=lhs, rhs=rhs, note=_note(lhs, rhs))
