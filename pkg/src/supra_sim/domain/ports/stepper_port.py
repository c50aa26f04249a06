"""Port (interface) for time steppers."""

from typing import Protocol, TypeVar

from ..models.numerics import NewtonSettings

StateT = TypeVar("StateT")


class TimeStepper(Protocol[StateT]):
    """Advance a two-level state by one time step.

    Implementations own no state of their own; the state object carries the
    levels, the step index and the physics.
    """

    def step(self, state: StateT, newton: NewtonSettings) -> StateT:
        """Compute level k+1 and rotate the levels.

        Args:
            state: Current state holding levels k-1 and k
            newton: Iteration settings

        Returns:
            State holding levels k and k+1

        Raises:
            StepFailureError: If the nonlinear solve does not converge
        """
        ...

    @property
    def name(self) -> str:
        """Short identifier used in logs and result metadata."""
        ...
