"""Radial energy functionals and the discrete energy-rate balance."""

import math

import numpy as np

from ..exceptions import IdentityNotApplicableError
from ..models.radial import RadialParams
from ..models.reports import EnergyReport
from .radial_scheme import (
    Field,
    check_radial_levels,
    node_damping,
    node_radii,
    outer_ratio,
    radial_residual,
    radial_residual_tolerance,
)
from .potentials import potential_value

IDENTITY_SLACK = 100.0


def _weighted_potential(params: RadialParams, v: Field, r: Field) -> Field:
    return r**2 * potential_value(params.medium.potential, v / r)


def radial_energy(curr: Field, nxt: Field, params: RadialParams, dt: float) -> float:
    """Energy functional in its printed form.

    Kinetic, cross-level gradient, mass and source sums run over j = 0..M-1,
    the potential sum over j = 1..M-1. Kept for comparison with published
    figures; it does not balance exactly for epsilon > 0.
    """
    check_radial_levels(params, curr, nxt)
    medium = params.medium
    dr = params.dr
    r = node_radii(params)
    m = params.m_nodes

    kinetic = 0.5 * np.sum(((nxt[:m] - curr[:m]) / dt) ** 2)
    gradient = 0.5 * np.sum((nxt[1 : m + 1] - nxt[:m]) * (curr[1 : m + 1] - curr[:m])) / dr**2
    mass = 0.25 * medium.mass_sq * np.sum(nxt[:m] ** 2 + curr[:m] ** 2)
    potential = 0.5 * np.sum(
        _weighted_potential(params, nxt[1:m], r[1:m])
        + _weighted_potential(params, curr[1:m], r[1:m])
    )
    source = 0.5 * medium.josephson * np.sum(r[:m] * (nxt[:m] + curr[:m]))
    return float((kinetic + gradient + mass + potential - source) * dr)


def radial_energy_balanced(curr: Field, nxt: Field, params: RadialParams, dt: float) -> float:
    """Energy whose step-to-step change matches the scheme exactly.

    Site energies over the interior nodes j = 1..M, the cross-level gradient
    sum over j = 0..M-1 and the outer-boundary term (1 - rho) v+_M v_M / (2 dr^2).
    """
    check_radial_levels(params, curr, nxt)
    medium = params.medium
    dr = params.dr
    r = node_radii(params)[1:-1]
    m = params.m_nodes
    v = curr[1:-1]
    v_next = nxt[1:-1]

    site = (
        0.5 * ((v_next - v) / dt) ** 2
        + 0.25 * medium.mass_sq * (v_next**2 + v**2)
        + 0.5 * (_weighted_potential(params, v_next, r) + _weighted_potential(params, v, r))
        - 0.5 * medium.josephson * r * (v_next + v)
    )
    gradient = 0.5 * np.sum((nxt[1 : m + 1] - nxt[:m]) * (curr[1 : m + 1] - curr[:m])) / dr**2
    outer = 0.5 * (1.0 - outer_ratio(params)) * nxt[m] * curr[m] / dr**2
    return float((np.sum(site) + gradient + outer) * dr)


def radial_rate_rhs(
    prev: Field, curr: Field, nxt: Field, params: RadialParams, dt: float
) -> float:
    """Exact rate of radial_energy_balanced for a scheme-satisfying triple."""
    beta = params.medium.beta
    dr = params.dr
    rho = outer_ratio(params)
    m = params.m_nodes
    w = nxt - prev
    scale = 2.0 * dt * dr

    internal = (
        np.sum(((w[1 : m + 1] - w[:m]) / scale) ** 2)
        + (1.0 - rho) * (w[m] / scale) ** 2
        + (w[1] - w[0]) * w[0] / scale**2
    )
    external = np.sum(node_damping(params) * (w[1 : m + 1] / (2.0 * dt)) ** 2)
    flux = (curr[1] - curr[0]) / dr**2 * w[0] / (2.0 * dt)
    return float((-beta * internal - external - flux) * dr)


def printed_rate_rhs(
    prev: Field, curr: Field, nxt: Field, params: RadialParams, dt: float
) -> float:
    """Rate as printed for epsilon = 0, including its pi/2 prefactor."""
    beta = params.medium.beta
    dr = params.dr
    m = params.m_nodes
    w = nxt - prev
    velocity = w[1:m] / (2.0 * dt)
    internal = np.sum(velocity * (w[1:m] - w[: m - 1]) / (dt * dr**2))
    external = np.sum(node_damping(params)[: m - 1] * velocity**2)
    return float(-0.5 * math.pi * (beta * internal + external) * dr)


def radial_rate_report(
    prev: Field,
    curr: Field,
    nxt: Field,
    params: RadialParams,
    dt: float,
    tol: float = 1e-12,
) -> EnergyReport:
    """Energy balance of one radial step.

    ``residual`` certifies the balanced identity. The printed-form residuals
    compare (E^k - E^{k-1})/dt of the printed energy, raw and scaled by pi/2,
    with the printed rate.

    Raises:
        IdentityNotApplicableError: If the triple does not satisfy the scheme
    """
    residual = radial_residual(prev, curr, nxt, params, dt)
    worst = float(np.max(np.abs(residual)))
    limit = IDENTITY_SLACK * radial_residual_tolerance(tol, prev, curr, nxt, dt)
    if worst > limit:
        raise IdentityNotApplicableError(
            f"Radial levels do not satisfy the scheme (max residual {worst:.3e} > {limit:.3e})"
        )

    e_prev = radial_energy_balanced(prev, curr, params, dt)
    e_curr = radial_energy_balanced(curr, nxt, params, dt)
    rate_lhs = (e_curr - e_prev) / dt
    rate_rhs = radial_rate_rhs(prev, curr, nxt, params, dt)

    printed_curr = radial_energy(curr, nxt, params, dt)
    printed_lhs = (printed_curr - radial_energy(prev, curr, params, dt)) / dt
    printed_rhs = printed_rate_rhs(prev, curr, nxt, params, dt)

    return EnergyReport(
        e_curr=e_curr,
        e_prev=e_prev,
        rate_lhs=rate_lhs,
        rate_rhs=rate_rhs,
        residual=abs(rate_lhs - rate_rhs),
        printed_raw_residual=abs(printed_lhs - printed_rhs),
        printed_scaled_residual=abs(0.5 * math.pi * printed_lhs - printed_rhs),
    )
