"""Time steppers and linear solvers."""

from .cartesian import (
    ExplicitStepper,
    ImplicitStepper,
    initial_state,
    jacobian_check,
    jacobian_vector_product,
    linear_explicit_update,
    step_explicit,
    step_implicit,
)
from .linear import jacobi_solve
from .radial import RadialStepper, initial_radial_state, step_radial
from .tridiagonal import solve_tridiagonal

__all__ = [
    "ExplicitStepper",
    "ImplicitStepper",
    "RadialStepper",
    "initial_radial_state",
    "initial_state",
    "jacobi_solve",
    "jacobian_check",
    "jacobian_vector_product",
    "linear_explicit_update",
    "solve_tridiagonal",
    "step_explicit",
    "step_implicit",
    "step_radial",
]
