"""Site-local external damping profiles."""

import numpy as np
import numpy.typing as npt

from ..exceptions import GridRangeError
from ..models.damping import DampingKind, DampingProfile
from ..models.grid import Grid3

# Width of the tanh ramp of the lattice absorbing layer, in sites.
LATTICE_RAMP_WIDTH = 6.0


def _lattice_term(profile: DampingProfile, n: int, q):
    n0 = profile.n0 or 0
    return np.tanh((2.0 * np.asarray(q, dtype=np.float64) - 2.0 * n + n0) / LATTICE_RAMP_WIDTH)


def _radial_extra(profile: DampingProfile, r):
    r_arr = np.asarray(r, dtype=np.float64)
    ramp = 0.5 * (1.0 + np.tanh(profile.width_factor * (r_arr - profile.center)))
    return np.where(r_arr >= profile.onset, ramp, 0.0)


def eval_damping(
    profile: DampingProfile,
    gamma: float,
    position: tuple[int, int, int] | float,
    grid: Grid3 | None = None,
    outer_radius: float | None = None,
) -> float:
    """Damping coefficient at a lattice site or at a radius.

    Args:
        profile: Damping profile
        gamma: Baseline external damping
        position: Site (m, n, p) for Cartesian grids, radius r for radial ones
        grid: Grid the site belongs to (required for site positions)
        outer_radius: Upper bound L for radii, if known

    Returns:
        The local damping value, never below ``gamma``

    Raises:
        GridRangeError: If the site or radius lies outside the domain
    """
    if isinstance(position, tuple):
        if grid is None:
            raise GridRangeError("A grid is required to evaluate damping at a lattice site")
        if any(not 0 <= q <= grid.n + 1 for q in position):
            raise GridRangeError(f"Site {position} outside [0, {grid.n + 1}]^3")
        if profile.kind is not DampingKind.LATTICE_ABSORBING:
            return gamma
        total = sum(float(_lattice_term(profile, grid.n, q)) for q in position)
        return gamma + (3.0 + total) / 6.0

    r = float(position)
    if r < 0.0 or (outer_radius is not None and r > outer_radius + 1e-12):
        raise GridRangeError(f"Radius {r} outside [0, {outer_radius}]")
    if profile.kind is not DampingKind.RADIAL_ABSORBING:
        return gamma
    return gamma + float(_radial_extra(profile, r))


def damping_field(profile: DampingProfile, gamma: float, grid: Grid3) -> npt.NDArray[np.float64]:
    """Damping over the interior sites, shape (N, N, N)."""
    if profile.kind is not DampingKind.LATTICE_ABSORBING:
        return np.full(grid.interior_shape, gamma, dtype=np.float64)

    axis = _lattice_term(profile, grid.n, np.arange(1, grid.n + 1))
    total = axis[:, None, None] + axis[None, :, None] + axis[None, None, :]
    return gamma + (3.0 + total) / 6.0


def radial_damping(
    profile: DampingProfile, gamma: float, radii: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    """Damping at each radial node."""
    if profile.kind is not DampingKind.RADIAL_ABSORBING:
        return np.full(radii.shape, gamma, dtype=np.float64)
    return gamma + _radial_extra(profile, radii)


def peak_damping(profile: DampingProfile, gamma: float, outer_radius: float = 0.0) -> float:
    """Largest value of a radial profile on [0, max(profile.outer, outer_radius)].

    The absorbing ramp is non-decreasing in r, so the maximum sits at the far end.
    """
    if profile.kind is not DampingKind.RADIAL_ABSORBING:
        return gamma
    return gamma + float(_radial_extra(profile, max(profile.outer, outer_radius)))
