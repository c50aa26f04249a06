"""Newton stepper for the radial scheme with tridiagonal corrections."""

import logging
from dataclasses import replace

import numpy as np

from ...domain.exceptions import StepFailureError
from ...domain.models.numerics import NewtonSettings
from ...domain.models.radial import RadialParams
from ...domain.models.state import RadialState
from ...domain.services.driving import eval_driving
from ...domain.services.potentials import potential_quotient_deriv
from ...domain.services.radial_scheme import (
    Field,
    apply_radial_boundaries,
    node_damping,
    node_radii,
    outer_ratio,
    radial_residual,
    radial_residual_tolerance,
)
from .tridiagonal import solve_tridiagonal

logger = logging.getLogger(__name__)

EPS = float(np.finfo(np.float64).eps)
SLOW_NEWTON_ITERS = 10


def initial_radial_state(params: RadialParams, dt: float) -> RadialState:
    """Medium at rest, with the first two levels placed at the start of the warmup.

    The warmup shifts the start to k0 = -round(warmup / dt) so the ramp has
    finished by t = 0.
    """
    k0 = -round(params.signal.warmup / dt)
    prev = np.zeros(params.size)
    curr = np.zeros(params.size)
    apply_radial_boundaries(prev, params, eval_driving(params.signal, k0 * dt))
    apply_radial_boundaries(curr, params, eval_driving(params.signal, (k0 + 1) * dt))
    if k0:
        logger.debug("Radial warmup", extra={"k0": k0, "warmup": params.signal.warmup})
    return RadialState(prev=prev, curr=curr, k=k0 + 1, params=params, dt=dt)


def _jacobian(
    params: RadialParams, dt: float, x: Field, v_minus: Field, gamma: Field
) -> tuple[Field, Field, Field]:
    medium = params.medium
    r = node_radii(params)[1:-1]
    coeff = medium.beta / (2.0 * dt * params.dr**2)

    diag = (
        1.0 / dt**2
        + gamma / (2.0 * dt)
        + 0.5 * medium.mass_sq
        + 2.0 * coeff
        + potential_quotient_deriv(medium.potential, x / r, v_minus / r)
    )
    diag = np.array(np.broadcast_to(diag, x.shape), dtype=np.float64)
    diag[-1] -= coeff * outer_ratio(params)
    off = np.full(x.shape, -coeff)
    return off, diag, off.copy()


def step_radial(state: RadialState, newton: NewtonSettings) -> RadialState:
    """Advance the radial field by one step.

    Newton corrections solve the tridiagonal Jacobian exactly; v_{M+1} is
    eliminated through the outer relation.

    Raises:
        StepFailureError: If Newton does not converge within max_iters
        SingularSystemError: On a zero pivot of the Jacobian
    """
    params = state.params
    dt = state.dt
    gamma = node_damping(params)
    phi = eval_driving(params.signal, (state.k + 1) * dt)
    v_minus = state.prev[1:-1]
    x = 2.0 * state.curr[1:-1] - v_minus

    nxt = np.empty_like(state.curr)
    residual = np.zeros_like(x)
    stalled = False
    for iteration in range(newton.max_iters + 1):
        nxt[1:-1] = x
        apply_radial_boundaries(nxt, params, phi)
        residual = radial_residual(state.prev, state.curr, nxt, params, dt, gamma_nodes=gamma)
        worst = float(np.max(np.abs(residual)))
        threshold = radial_residual_tolerance(newton.tol_residual, state.prev, state.curr, nxt, dt)
        if worst <= threshold or (stalled and worst <= 2.0 * threshold):
            extra = {"step": state.k + 1, "iterations": iteration, "residual": worst}
            if iteration > SLOW_NEWTON_ITERS:
                logger.warning("Slow radial Newton convergence", extra=extra)
            else:
                logger.debug("Radial Newton step converged", extra=extra)
            return replace(state, prev=state.curr, curr=nxt.copy(), k=state.k + 1)
        if stalled or iteration == newton.max_iters:
            break

        lower, diag, upper = _jacobian(params, dt, x, v_minus, gamma)
        update = solve_tridiagonal(lower, diag, upper, -residual)
        x = x + update
        stalled = bool(np.all(np.abs(update) <= 4.0 * EPS * np.maximum(1.0, np.abs(x))))

    raise StepFailureError(
        step=state.k + 1,
        site=int(np.argmax(np.abs(residual))) + 1,
        last_residual=float(np.max(np.abs(residual))),
        iterations=newton.max_iters,
    )


class RadialStepper:
    """TimeStepper for the radial problem."""

    name = "radial"

    def step(self, state: RadialState, newton: NewtonSettings) -> RadialState:
        return step_radial(state, newton)
