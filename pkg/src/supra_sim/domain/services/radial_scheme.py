"""Implicit scheme for v(r, t) = r u(r, t) on r_j = epsilon + j dr, j = 0..M+1."""

import numpy as np
import numpy.typing as npt

from ..exceptions import ContractError, SingularSystemError
from ..models.radial import OuterBoundaryMode, RadialParams
from .damping import radial_damping
from .potentials import potential_quotient

Field = npt.NDArray[np.float64]


def node_radii(params: RadialParams) -> Field:
    """Radii of all nodes j = 0..M+1."""
    return params.epsilon + params.dr * np.arange(params.size, dtype=np.float64)


def node_damping(params: RadialParams) -> Field:
    """Damping at the interior nodes j = 1..M."""
    return radial_damping(params.damping, params.medium.gamma, node_radii(params)[1:-1])


def outer_ratio(params: RadialParams) -> float:
    """Factor rho of the linear outer relation v_{M+1} = rho v_M.

    Consistent mode discretizes dv/dr + v/r = 0 at r_M as
    (v_{M+1} - v_M)/dr + (v_{M+1} + v_M)/(2 r_M) = 0; the printed mode uses
    2 r_M^2 in the second denominator.

    Raises:
        SingularSystemError: If the relation cannot be solved for v_{M+1}
    """
    r_m = params.epsilon + params.m_nodes * params.dr
    weight = r_m if params.boundary_mode is OuterBoundaryMode.CONSISTENT else r_m**2
    lead = 1.0 / params.dr + 1.0 / (2.0 * weight)
    if lead == 0.0:
        raise SingularSystemError("Degenerate outer boundary relation")
    return (1.0 / params.dr - 1.0 / (2.0 * weight)) / lead


def outer_boundary_value(v_m: float, params: RadialParams) -> float:
    """Solve the discrete outer boundary relation for v_{M+1}."""
    return outer_ratio(params) * v_m


def apply_radial_boundaries(level: Field, params: RadialParams, phi: float) -> Field:
    """Origin Dirichlet v_0 = epsilon phi and the outer relation at j = M+1."""
    level[0] = params.epsilon * phi
    level[-1] = outer_ratio(params) * level[-2]
    return level


def check_radial_levels(params: RadialParams, *levels: Field) -> None:
    for level in levels:
        if level.shape != (params.size,):
            raise ContractError(
                f"Radial level shape {level.shape} does not match ({params.size},)"
            )


def second_difference(level: Field) -> Field:
    """v_{j+1} - 2 v_j + v_{j-1} at j = 1..M."""
    return level[2:] - 2.0 * level[1:-1] + level[:-2]


def radial_residual(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: RadialParams,
    dt: float,
    gamma_nodes: Field | None = None,
) -> Field:
    """Left-hand side of the radial scheme at j = 1..M.

    Args:
        prev: Level k-1 over j = 0..M+1
        curr: Level k
        nxt: Level k+1 with its boundary entries populated
        params: Radial parameters
        dt: Time step
        gamma_nodes: Damping at j = 1..M (defaults to the configured profile)

    Returns:
        Residual array of length M

    Raises:
        ContractError: If the level lengths disagree with M
    """
    check_radial_levels(params, prev, curr, nxt)
    medium = params.medium
    dr = params.dr
    gamma = node_damping(params) if gamma_nodes is None else gamma_nodes
    r = node_radii(params)[1:-1]

    v_minus = prev[1:-1]
    v = curr[1:-1]
    v_plus = nxt[1:-1]

    residual = (v_plus - 2.0 * v + v_minus) / dt**2 - second_difference(curr) / dr**2
    residual += gamma * (v_plus - v_minus) / (2.0 * dt)
    if medium.beta != 0.0:
        residual -= (
            medium.beta * (second_difference(nxt) - second_difference(prev)) / (2.0 * dt * dr**2)
        )
    residual += 0.5 * medium.mass_sq * (v_plus + v_minus)
    residual += r * potential_quotient(medium.potential, v_plus / r, v_minus / r)
    residual -= medium.josephson * r
    return np.asarray(residual, dtype=np.float64)


def radial_residual_tolerance(
    tol: float, prev: Field, curr: Field, nxt: Field, dt: float
) -> float:
    """tol * max(1, max(|v+| + 2|v| + |v-|) / dt^2) over the interior nodes."""
    scale = float(np.max(np.abs(nxt[1:-1]) + 2.0 * np.abs(curr[1:-1]) + np.abs(prev[1:-1])))
    return tol * max(1.0, scale / dt**2)
