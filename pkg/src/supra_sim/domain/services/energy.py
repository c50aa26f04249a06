"""Discrete Hamiltonian, total energy and energy-rate balance on the cube."""

import logging

import numpy as np

from ..exceptions import GridRangeError, IdentityNotApplicableError, ModeError
from ..models.damping import DampingProfile
from ..models.grid import Grid3, TimeGrid
from ..models.medium import MediumParams
from ..models.reports import EnergyReport
from .cartesian_scheme import (
    INTERIOR,
    Field,
    check_levels,
    face_differences,
    face_values,
    forward_differences,
    resolve_gamma,
    residual_tolerance,
    scheme_residual,
)
from .potentials import potential_value

logger = logging.getLogger(__name__)

# Factor on the Newton tolerance beyond which a triple is not a scheme solution.
IDENTITY_SLACK = 100.0


def energy_density_field(
    curr: Field, nxt: Field, params: MediumParams, grid: Grid3, time: TimeGrid
) -> Field:
    """Hamiltonian H^k at every interior site, from levels k and k+1.

    Returns:
        Array of shape (N, N, N)
    """
    check_levels(grid, curr, nxt)
    dt = time.dt
    u = curr[INTERIOR]
    u_next = nxt[INTERIOR]

    kinetic = 0.5 * ((u_next - u) / dt) ** 2
    gradient = np.zeros_like(u)
    for d_next, d_curr, h in zip(
        forward_differences(nxt), forward_differences(curr), grid.steps, strict=True
    ):
        gradient += d_next * d_curr / h**2
    mass = 0.25 * params.mass_sq * (u_next**2 + u**2)
    kind = params.potential
    potential = 0.5 * (potential_value(kind, u_next) + potential_value(kind, u))
    source = 0.5 * params.josephson * (u_next + u)

    return kinetic + 0.5 * params.coupling**2 * gradient + mass + potential - source


def site_hamiltonian(
    curr: Field,
    nxt: Field,
    site: tuple[int, int, int],
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
) -> float:
    """H^k at one interior site.

    Raises:
        GridRangeError: If the site is a boundary or ghost site
    """
    if any(not 1 <= q <= grid.n for q in site):
        raise GridRangeError(f"Site {site} is not interior to [1, {grid.n}]^3")

    m, n, p = site
    window = (slice(m - 1, m + 2), slice(n - 1, n + 2), slice(p - 1, p + 2))
    local = Grid3(n=1, dx=grid.dx, dy=grid.dy, dz=grid.dz)
    return float(
        energy_density_field(curr[window], nxt[window], params, local, time)[0, 0, 0]
    )


def _boundary_coupling(curr: Field, nxt: Field, params: MediumParams, grid: Grid3) -> float:
    total = 0.0
    for d_next, d_curr, h in zip(
        face_differences(nxt), face_differences(curr), grid.steps, strict=True
    ):
        total += float(np.sum(d_next * d_curr)) / h**2
    return 0.5 * params.coupling**2 * total


def total_energy(
    curr: Field, nxt: Field, params: MediumParams, grid: Grid3, time: TimeGrid
) -> float:
    """E^k: interior Hamiltonians plus the coupling to the driven faces, times dx dy dz."""
    density = energy_density_field(curr, nxt, params, grid, time)
    bulk = float(np.sum(density))
    return (bulk + _boundary_coupling(curr, nxt, params, grid)) * grid.cell_volume


def _rate_terms(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: MediumParams,
    grid: Grid3,
    dt: float,
    gamma: Field | float,
) -> dict[str, float]:
    """Flux, internal-damping and external-damping parts of the exact rate, per unit volume."""
    w = nxt - prev
    two_dt = 2.0 * dt

    flux = 0.0
    beta_face = 0.0
    for d_curr, w_face, dw_face, h in zip(
        face_differences(curr), face_values(w), face_differences(w), grid.steps, strict=True
    ):
        flux -= float(np.sum(d_curr * w_face)) / (h**2 * two_dt)
        beta_face += float(np.sum(dw_face * w_face)) / (h * two_dt) ** 2

    beta_bulk = 0.0
    centre = w[INTERIOR]
    backward = (
        centre - w[:-2, 1:-1, 1:-1],
        centre - w[1:-1, :-2, 1:-1],
        centre - w[1:-1, 1:-1, :-2],
    )
    for diff, h in zip(backward, grid.steps, strict=True):
        beta_bulk += float(np.sum((diff / (h * two_dt)) ** 2))

    velocity = centre / two_dt
    damping = float(np.sum(gamma * velocity**2))

    return {
        "flux": params.coupling**2 * flux,
        "beta": -params.beta * (beta_bulk + beta_face),
        "gamma": -damping,
    }


def energy_rate_report(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
    damping: DampingProfile | None = None,
    gamma_field: Field | None = None,
    tol: float = 1e-12,
) -> EnergyReport:
    """Compare (E^k - E^{k-1})/dt with the exact discrete rate.

    The rate collects the flux through the driven faces, the internal damping
    sums (bulk and face) and the external damping sum with site-local gamma.

    Args:
        prev: Level k-1
        curr: Level k
        nxt: Level k+1
        params: Medium coefficients
        grid: Spatial grid
        time: Time grid
        damping: Damping profile
        gamma_field: Precomputed interior damping
        tol: Newton tolerance the levels were computed with

    Returns:
        Energy report for step k

    Raises:
        IdentityNotApplicableError: If the triple does not satisfy the scheme
    """
    dt = time.dt
    gamma = resolve_gamma(params, grid, damping, gamma_field)
    gamma_sites = np.broadcast_to(np.asarray(gamma, dtype=np.float64), grid.interior_shape)
    residual = scheme_residual(prev, curr, nxt, params, grid, time, gamma_field=gamma_sites)
    worst = float(np.max(np.abs(residual)))
    limit = IDENTITY_SLACK * residual_tolerance(tol, prev, curr, nxt, dt)
    if worst > limit:
        raise IdentityNotApplicableError(
            f"Levels do not satisfy the scheme (max residual {worst:.3e} > {limit:.3e})"
        )

    e_prev = total_energy(prev, curr, params, grid, time)
    e_curr = total_energy(curr, nxt, params, grid, time)
    rate_lhs = (e_curr - e_prev) / dt
    terms = _rate_terms(prev, curr, nxt, params, grid, dt, gamma)
    rate_rhs = sum(terms.values()) * grid.cell_volume

    return EnergyReport(
        e_curr=e_curr,
        e_prev=e_prev,
        rate_lhs=rate_lhs,
        rate_rhs=rate_rhs,
        residual=abs(rate_lhs - rate_rhs),
    )


def lattice_rate_rhs(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
    damping: DampingProfile | None = None,
    gamma_field: Field | None = None,
) -> float:
    """Rate of the lattice energy with velocities replaced by centred differences.

    -c^2 sum_faces (delta u_0) u'_0 - beta [sum (delta u'_{q-1})^2 + sum_faces (delta u'_0) u'_0]
    - sum gamma u'^2, with u' = (u^{k+1} - u^{k-1}) / (2 dt).

    Raises:
        ModeError: If the grid does not have unit steps
    """
    if not grid.unit_steps:
        raise ModeError("lattice_rate_rhs requires unit spatial steps (lattice mode)")
    check_levels(grid, prev, curr, nxt)
    gamma = resolve_gamma(params, grid, damping, gamma_field)
    return sum(_rate_terms(prev, curr, nxt, params, grid, time.dt, gamma).values())
