"""Three-level finite-difference scheme on the cube and its boundary layers.

Levels are (N+2)^3 arrays. Index 0 on each axis is the driven layer, index
N+1 the Neumann ghost layer; the unknowns live on [1, N]^3.
"""

import numpy as np
import numpy.typing as npt

from ..exceptions import ContractError, GridRangeError
from ..models.damping import DampingProfile
from ..models.grid import Grid3, TimeGrid
from ..models.medium import MediumParams
from .damping import damping_field
from .potentials import potential_quotient

Field = npt.NDArray[np.float64]

INTERIOR = (slice(1, -1), slice(1, -1), slice(1, -1))


def index_map(m: int, n: int, p: int, size_n: int) -> int:
    """One-based linear index i = m (N+2)^2 + n (N+2) + p + 1.

    Raises:
        GridRangeError: If any index lies outside [0, N+1]
    """
    side = size_n + 2
    for q in (m, n, p):
        if not 0 <= q <= size_n + 1:
            raise GridRangeError(f"Index ({m}, {n}, {p}) outside [0, {size_n + 1}]^3")
    return m * side * side + n * side + p + 1


def check_levels(grid: Grid3, *levels: Field) -> None:
    """Raise ContractError unless every level has the grid's storage shape."""
    for level in levels:
        if level.shape != grid.shape:
            raise ContractError(f"Level shape {level.shape} does not match grid {grid.shape}")


def apply_boundaries(level: Field, phi: float) -> Field:
    """Set the driven faces to phi, then copy layer N into the ghost layer N+1."""
    level[0, :, :] = phi
    level[:, 0, :] = phi
    level[:, :, 0] = phi
    level[-1, :, :] = level[-2, :, :]
    level[:, -1, :] = level[:, -2, :]
    level[:, :, -1] = level[:, :, -2]
    return level


def interior(level: Field) -> Field:
    return level[INTERIOR]


def laplacian(level: Field, grid: Grid3) -> Field:
    """Seven-point Laplacian sum_a delta_a^2 u / h_a^2 at the interior sites."""
    centre = level[INTERIOR]
    dx, dy, dz = grid.steps
    return (
        (level[2:, 1:-1, 1:-1] - 2.0 * centre + level[:-2, 1:-1, 1:-1]) / dx**2
        + (level[1:-1, 2:, 1:-1] - 2.0 * centre + level[1:-1, :-2, 1:-1]) / dy**2
        + (level[1:-1, 1:-1, 2:] - 2.0 * centre + level[1:-1, 1:-1, :-2]) / dz**2
    )


def forward_differences(level: Field) -> tuple[Field, Field, Field]:
    """Forward differences u_{q+1} - u_q along each axis at the interior sites."""
    centre = level[INTERIOR]
    return (
        level[2:, 1:-1, 1:-1] - centre,
        level[1:-1, 2:, 1:-1] - centre,
        level[1:-1, 1:-1, 2:] - centre,
    )


def face_differences(level: Field) -> tuple[Field, Field, Field]:
    """Differences u_1 - u_0 off the three driven faces, each of shape (N, N)."""
    return (
        level[1, 1:-1, 1:-1] - level[0, 1:-1, 1:-1],
        level[1:-1, 1, 1:-1] - level[1:-1, 0, 1:-1],
        level[1:-1, 1:-1, 1] - level[1:-1, 1:-1, 0],
    )


def face_values(level: Field) -> tuple[Field, Field, Field]:
    """Values on the three driven faces over the interior index range."""
    return (level[0, 1:-1, 1:-1], level[1:-1, 0, 1:-1], level[1:-1, 1:-1, 0])


def resolve_gamma(
    params: MediumParams,
    grid: Grid3,
    damping: DampingProfile | None,
    gamma_field: Field | None = None,
) -> Field | float:
    """Site damping: an explicit field, the profile's field, or the baseline."""
    if gamma_field is not None:
        return gamma_field
    if damping is None:
        return params.gamma
    return damping_field(damping, params.gamma, grid)


def scheme_residual(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
    damping: DampingProfile | None = None,
    gamma_field: Field | None = None,
) -> Field:
    """Left-hand side of the three-level scheme at every interior site.

    (u+ - 2u + u-)/dt^2 - c^2 L u - beta L(u+ - u-)/(2 dt) + gamma (u+ - u-)/(2 dt)
    + m^2 (u+ + u-)/2 + (V(u+) - V(u-))/(u+ - u-) - J

    Args:
        prev: Level k-1
        curr: Level k
        nxt: Level k+1, boundary layers already populated
        params: Medium coefficients
        grid: Spatial grid
        time: Time grid (only dt is used)
        damping: Damping profile, if any
        gamma_field: Precomputed interior damping, overrides the profile

    Returns:
        Residual array of shape (N, N, N)

    Raises:
        ContractError: If the level shapes disagree with the grid
    """
    check_levels(grid, prev, curr, nxt)
    dt = time.dt
    gamma = resolve_gamma(params, grid, damping, gamma_field)

    u_minus = prev[INTERIOR]
    u = curr[INTERIOR]
    u_plus = nxt[INTERIOR]
    velocity = (u_plus - u_minus) / (2.0 * dt)

    residual = (u_plus - 2.0 * u + u_minus) / dt**2 - params.coupling**2 * laplacian(curr, grid)
    if params.beta != 0.0:
        residual -= params.beta * (laplacian(nxt, grid) - laplacian(prev, grid)) / (2.0 * dt)
    residual += gamma * velocity
    residual += 0.5 * params.mass_sq * (u_plus + u_minus)
    residual += potential_quotient(params.potential, u_plus, u_minus)
    residual -= params.josephson
    return np.asarray(residual, dtype=np.float64)


def residual_scale(prev: Field, curr: Field, nxt: Field, dt: float) -> float:
    """Magnitude max(|u+| + 2|u| + |u-|)/dt^2 setting the rounding floor of the residual."""
    total = np.abs(nxt[INTERIOR]) + 2.0 * np.abs(curr[INTERIOR]) + np.abs(prev[INTERIOR])
    return float(np.max(total)) / dt**2


def residual_tolerance(tol: float, prev: Field, curr: Field, nxt: Field, dt: float) -> float:
    """Acceptance threshold tol * max(1, scale)."""
    return tol * max(1.0, residual_scale(prev, curr, nxt, dt))
