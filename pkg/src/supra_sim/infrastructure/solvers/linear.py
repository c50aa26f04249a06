"""Diagonally preconditioned stationary iteration for the Newton corrections."""

import logging
from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from ...domain.exceptions import LinearSolverError

logger = logging.getLogger(__name__)

Array = npt.NDArray[np.float64]

STAGNATION_WINDOW = 50
# Relative residual below which a stalled iteration is accepted as converged.
ROUNDING_FLOOR = 1e-12


def jacobi_solve(
    diag: Array,
    off_diagonal: Callable[[Array], Array],
    rhs: Array,
    tol: float,
    max_iters: int,
) -> Array:
    """Solve (D + O) x = rhs by Jacobi sweeps x <- (rhs - O x) / D.

    Args:
        diag: Diagonal D, same shape as rhs
        off_diagonal: Matrix-free product with the off-diagonal part O
        rhs: Right-hand side
        tol: Target relative residual ||rhs - A x|| / ||rhs||
        max_iters: Sweep cap

    Returns:
        Approximate solution

    Raises:
        LinearSolverError: If the relative residual is not halved over a
            window of sweeps while still above the rounding floor
    """
    norm_rhs = float(np.max(np.abs(rhs)))
    x = rhs / diag
    if norm_rhs == 0.0:
        return x

    window_start = np.inf
    relative = np.inf
    for sweep in range(1, max_iters + 1):
        coupling = off_diagonal(x)
        relative = float(np.max(np.abs(rhs - diag * x - coupling))) / norm_rhs
        if relative <= tol:
            return x
        if sweep % STAGNATION_WINDOW == 1:
            window_start = relative
        elif sweep % STAGNATION_WINDOW == 0 and relative > 0.5 * window_start:
            if relative <= ROUNDING_FLOOR:
                return x
            raise LinearSolverError(relative, sweep)
        x = (rhs - coupling) / diag

    logger.warning(
        "Linear iteration hit its sweep cap",
        extra={"sweeps": max_iters, "relative_residual": relative},
    )
    return x
