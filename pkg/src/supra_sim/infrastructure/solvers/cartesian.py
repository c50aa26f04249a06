"""Explicit and implicit Newton steppers for the cube."""

import logging
from dataclasses import replace

import numpy as np

from ...domain.exceptions import ModeError, SingularSystemError, StepFailureError
from ...domain.models.damping import DampingProfile
from ...domain.models.driving import DrivingSignal
from ...domain.models.grid import Grid3, TimeGrid
from ...domain.models.medium import MediumParams, PotentialName
from ...domain.models.numerics import NewtonSettings
from ...domain.models.state import SimState3D
from ...domain.services.cartesian_scheme import (
    INTERIOR,
    Field,
    apply_boundaries,
    check_levels,
    laplacian,
    residual_tolerance,
    scheme_residual,
)
from ...domain.services.damping import damping_field
from ...domain.services.driving import eval_driving
from ...domain.services.potentials import potential_quotient, potential_quotient_deriv
from .linear import jacobi_solve

logger = logging.getLogger(__name__)

EPS = float(np.finfo(np.float64).eps)
SLOW_NEWTON_ITERS = 10


def initial_state(
    params: MediumParams,
    grid: Grid3,
    time: TimeGrid,
    damping: DampingProfile,
    signal: DrivingSignal,
    displacement: Field | None = None,
    velocity: Field | None = None,
    first_level: Field | None = None,
) -> SimState3D:
    """Startup levels u^0 and u^1 with their boundary layers applied.

    u^0 is the displacement (zero by default) and u^1 = u^0 + dt * velocity,
    unless ``first_level`` supplies u^1 directly.

    Args:
        params: Medium coefficients
        grid: Spatial grid
        time: Time grid
        damping: Damping profile
        signal: Boundary driving
        displacement: Initial field over the full (N+2)^3 storage
        velocity: Initial velocity over the full storage
        first_level: Exact level u^1, overriding ``velocity``

    Returns:
        State at k = 1
    """
    dt = time.dt
    u0 = np.zeros(grid.shape) if displacement is None else np.array(displacement, dtype=np.float64)
    if first_level is not None:
        u1 = np.array(first_level, dtype=np.float64)
    elif velocity is not None:
        u1 = u0 + dt * np.asarray(velocity, dtype=np.float64)
    else:
        u1 = u0.copy()
    check_levels(grid, u0, u1)

    apply_boundaries(u0, eval_driving(signal, 0.0))
    apply_boundaries(u1, eval_driving(signal, dt))

    return SimState3D(
        prev=u0,
        curr=u1,
        k=1,
        params=params,
        grid=grid,
        time=time,
        damping=damping,
        signal=signal,
        gamma_field=damping_field(damping, params.gamma, grid),
    )


def _gamma(state: SimState3D) -> Field:
    if state.gamma_field is None:
        state.gamma_field = damping_field(state.damping, state.params.gamma, state.grid)
    return state.gamma_field


def _advance(state: SimState3D, interior_next: Field) -> SimState3D:
    nxt = np.empty_like(state.curr)
    nxt[INTERIOR] = interior_next
    apply_boundaries(nxt, eval_driving(state.signal, (state.k + 1) * state.time.dt))
    return replace(state, prev=state.curr, curr=nxt, k=state.k + 1)


def _worst_site(residual: Field) -> tuple[int, int, int]:
    m, n, p = np.unravel_index(int(np.argmax(np.abs(residual))), residual.shape)
    return (int(m) + 1, int(n) + 1, int(p) + 1)


def _log_iterations(state: SimState3D, iterations: int, residual: float, method: str) -> None:
    extra = {
        "step": state.k + 1,
        "t": (state.k + 1) * state.time.dt,
        "iterations": iterations,
        "residual": residual,
        "method": method,
    }
    if iterations > SLOW_NEWTON_ITERS:
        logger.warning("Slow Newton convergence", extra=extra)
    else:
        logger.debug("Newton step converged", extra=extra)


def _explicit_known_terms(state: SimState3D) -> tuple[Field, Field]:
    """Split the beta = 0 scheme as a(x) x + Q(x, u-) + known = 0; returns (a, known)."""
    params = state.params
    dt = state.time.dt
    gamma = _gamma(state)
    u = state.curr[INTERIOR]
    u_minus = state.prev[INTERIOR]

    a = 1.0 / dt**2 + gamma / (2.0 * dt) + 0.5 * params.mass_sq
    known = (
        (u_minus - 2.0 * u) / dt**2
        - params.coupling**2 * laplacian(state.curr, state.grid)
        - gamma * u_minus / (2.0 * dt)
        + 0.5 * params.mass_sq * u_minus
        - params.josephson
    )
    return np.broadcast_to(a, u.shape), known


def linear_explicit_update(state: SimState3D) -> Field:
    """Closed-form level k+1 (interior) for beta = 0 and a vanishing potential.

    Raises:
        SingularSystemError: If 1/dt^2 + gamma/(2 dt) + m^2/2 is not positive
    """
    a, known = _explicit_known_terms(state)
    if np.any(a <= 0.0):
        raise SingularSystemError("Explicit update coefficient is not positive; reduce dt")
    return -known / a


def step_explicit(state: SimState3D, newton: NewtonSettings) -> SimState3D:
    """Advance one level with decoupled scalar Newton solves (beta = 0).

    Args:
        state: State holding levels k-1 and k
        newton: Iteration settings

    Returns:
        State holding levels k and k+1

    Raises:
        ModeError: If beta is not zero
        StepFailureError: If Newton does not converge within max_iters
    """
    params = state.params
    if params.beta != 0.0:
        raise ModeError("The explicit path requires beta = 0")

    if params.potential.kind is PotentialName.ZERO:
        return _advance(state, linear_explicit_update(state))

    dt = state.time.dt
    a, known = _explicit_known_terms(state)
    u = state.curr[INTERIOR]
    u_minus = state.prev[INTERIOR]
    kind = params.potential
    x = 2.0 * u - u_minus

    residual = a * x + potential_quotient(kind, x, u_minus) + known
    threshold = np.inf
    for iteration in range(1, newton.max_iters + 1):
        slope = a + potential_quotient_deriv(kind, x, u_minus)
        update = residual / slope
        x = x - update
        residual = a * x + potential_quotient(kind, x, u_minus) + known

        scale = float(np.max(np.abs(x) + 2.0 * np.abs(u) + np.abs(u_minus))) / dt**2
        threshold = newton.tol_residual * max(1.0, scale)
        worst = float(np.max(np.abs(residual)))
        tiny = np.all(np.abs(update) <= 4.0 * EPS * np.maximum(1.0, np.abs(x)))
        if worst <= threshold or (tiny and worst <= 2.0 * threshold):
            _log_iterations(state, iteration, worst, "explicit")
            return _advance(state, x)
        if tiny:
            break

    raise StepFailureError(
        step=state.k + 1,
        site=_worst_site(residual),
        last_residual=float(np.max(np.abs(residual))),
        iterations=newton.max_iters,
    )


def _implicit_diagonal(state: SimState3D, x: Field) -> Field:
    """Jacobian diagonal with the Neumann ghost folded into layer N."""
    params = state.params
    grid = state.grid
    dt = state.time.dt
    u_minus = state.prev[INTERIOR]

    diag = (
        1.0 / dt**2
        + _gamma(state) / (2.0 * dt)
        + 0.5 * params.mass_sq
        + potential_quotient_deriv(params.potential, x, u_minus)
    )
    diag = np.array(np.broadcast_to(diag, x.shape), dtype=np.float64)

    if params.beta != 0.0:
        coeff = params.beta / (2.0 * dt)
        for axis, h in enumerate(grid.steps):
            weight = np.full(grid.n, 2.0)
            weight[-1] = 1.0
            shape = [1, 1, 1]
            shape[axis] = grid.n
            diag += coeff * weight.reshape(shape) / h**2
    return diag


def _implicit_off_diagonal(state: SimState3D):
    """Matrix-free product with the six neighbor couplings -beta/(2 dt h^2)."""
    beta = state.params.beta
    dt = state.time.dt
    dx, dy, dz = state.grid.steps

    def apply(v: Field) -> Field:
        if beta == 0.0:
            return np.zeros_like(v)
        padded = np.pad(v, 1)
        neighbors = (
            (padded[2:, 1:-1, 1:-1] + padded[:-2, 1:-1, 1:-1]) / dx**2
            + (padded[1:-1, 2:, 1:-1] + padded[1:-1, :-2, 1:-1]) / dy**2
            + (padded[1:-1, 1:-1, 2:] + padded[1:-1, 1:-1, :-2]) / dz**2
        )
        return -beta / (2.0 * dt) * neighbors

    return apply


def _assemble(state: SimState3D, x: Field) -> Field:
    nxt = np.empty_like(state.curr)
    nxt[INTERIOR] = x
    return apply_boundaries(nxt, eval_driving(state.signal, (state.k + 1) * state.time.dt))


def _check_dominance(state: SimState3D, diag: Field, off_diagonal) -> None:
    base = diag + off_diagonal(np.ones_like(diag))
    if float(np.min(base)) <= 0.0:
        logger.warning(
            "Jacobian diagonal does not dominate the neighbor couplings",
            extra={"step": state.k + 1, "min_margin": float(np.min(base))},
        )


def step_implicit(state: SimState3D, newton: NewtonSettings) -> SimState3D:
    """Advance one level by global Newton with a matrix-free Jacobian.

    Each correction solves J d = -F with the diagonally preconditioned
    stationary iteration; the boundary layers of the iterate are re-applied
    before every residual evaluation.

    Args:
        state: State holding levels k-1 and k
        newton: Iteration settings

    Returns:
        State holding levels k and k+1

    Raises:
        StepFailureError: If Newton does not converge within max_iters
        LinearSolverError: If the linear iteration stagnates
    """
    dt = state.time.dt
    gamma = _gamma(state)
    x = 2.0 * state.curr[INTERIOR] - state.prev[INTERIOR]
    off_diagonal = _implicit_off_diagonal(state)

    stalled = False
    residual = np.zeros_like(x)
    for iteration in range(newton.max_iters + 1):
        nxt = _assemble(state, x)
        residual = scheme_residual(
            state.prev, state.curr, nxt, state.params, state.grid, state.time, gamma_field=gamma
        )
        worst = float(np.max(np.abs(residual)))
        threshold = residual_tolerance(newton.tol_residual, state.prev, state.curr, nxt, dt)
        if worst <= threshold or (stalled and worst <= 2.0 * threshold):
            _log_iterations(state, iteration, worst, "implicit")
            return replace(state, prev=state.curr, curr=nxt, k=state.k + 1)
        if stalled or iteration == newton.max_iters:
            break

        diag = _implicit_diagonal(state, x)
        if iteration == 0:
            _check_dominance(state, diag, off_diagonal)
        update = jacobi_solve(
            diag, off_diagonal, -residual, newton.linear_tol, newton.linear_max_iters
        )
        x = x + update
        stalled = bool(np.all(np.abs(update) <= 4.0 * EPS * np.maximum(1.0, np.abs(x))))

    raise StepFailureError(
        step=state.k + 1,
        site=_worst_site(residual),
        last_residual=float(np.max(np.abs(residual))),
        iterations=newton.max_iters,
    )


def jacobian_vector_product(state: SimState3D, x: Field, v: Field) -> Field:
    """Analytic Jacobian of the residual in the interior unknowns, applied to v."""
    return _implicit_diagonal(state, x) * v + _implicit_off_diagonal(state)(v)


def jacobian_check(
    state: SimState3D,
    newton: NewtonSettings,
    direction: Field | None = None,
    step: float = 1e-6,
) -> float:
    """Largest deviation between the analytic Jacobian and central differences.

    The Jacobian is evaluated at the predictor 2u^k - u^{k-1} along
    ``direction`` (a seeded random vector by default).

    Returns:
        max |J v - (F(x + h v) - F(x - h v)) / (2 h)|
    """
    x = 2.0 * state.curr[INTERIOR] - state.prev[INTERIOR]
    if direction is None:
        direction = np.random.default_rng(0).uniform(-1.0, 1.0, x.shape)
    gamma = _gamma(state)

    def residual_at(values: Field) -> Field:
        return scheme_residual(
            state.prev,
            state.curr,
            _assemble(state, values),
            state.params,
            state.grid,
            state.time,
            gamma_field=gamma,
        )

    finite = (residual_at(x + step * direction) - residual_at(x - step * direction)) / (2.0 * step)
    analytic = jacobian_vector_product(state, x, direction)
    deviation = float(np.max(np.abs(analytic - finite)))
    logger.debug(
        "Jacobian check",
        extra={"deviation": deviation, "tol_residual": newton.tol_residual, "n": state.grid.n},
    )
    return deviation


class ExplicitStepper:
    """TimeStepper for beta = 0."""

    name = "explicit"

    def step(self, state: SimState3D, newton: NewtonSettings) -> SimState3D:
        return step_explicit(state, newton)


class ImplicitStepper:
    """TimeStepper for beta >= 0."""

    name = "implicit"

    def step(self, state: SimState3D, newton: NewtonSettings) -> SimState3D:
        return step_implicit(state, newton)
