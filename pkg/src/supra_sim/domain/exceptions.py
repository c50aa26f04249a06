"""Domain-level exceptions."""


class SimulationError(Exception):
    """Base exception for the simulator.

    Every error carries the process exit code the CLI reports for it.
    """

    def __init__(self, message: str, exit_code: int = 1):
        self.message = message
        self.exit_code = exit_code
        super().__init__(self.message)


class ConfigError(SimulationError):
    """Exception for invalid or unreadable configuration documents."""

    def __init__(self, message: str, errors: list[str] | None = None):
        self.errors = list(errors or [])
        if self.errors:
            message = message + "\n" + "\n".join(f"  - {e}" for e in self.errors)
        super().__init__(message, exit_code=3)


class GridRangeError(SimulationError):
    """Exception for site indices or radii outside the grid."""


class ContractError(SimulationError):
    """Exception for inconsistent array shapes passed between components."""


class ModeError(SimulationError):
    """Exception for an operation requested in the wrong discretization mode."""


class StepFailureError(SimulationError):
    """Exception raised when Newton's method does not converge within a step.

    Carries the offending site (a flat interior index for global solves), the
    step index and the last residual so a run can be diagnosed from the log.
    """

    def __init__(
        self,
        step: int,
        site: tuple[int, ...] | int | None,
        last_residual: float,
        iterations: int,
    ):
        """Initialize step failure.

        Args:
            step: Time step index being computed
            site: Site with the largest residual
            last_residual: Residual after the final iteration
            iterations: Iterations performed
        """
        self.step = step
        self.site = site
        self.last_residual = last_residual
        self.iterations = iterations

        message = (
            f"Newton iteration failed at step {step} after {iterations} iterations: "
            f"residual {last_residual:.3e} at site {site}"
        )
        super().__init__(message)


class LinearSolverError(SimulationError):
    """Exception raised when the inner linear iteration stagnates."""

    def __init__(self, relative_residual: float, iterations: int):
        self.relative_residual = relative_residual
        self.iterations = iterations
        message = (
            f"Linear iteration stagnated after {iterations} sweeps "
            f"(relative residual {relative_residual:.3e}); reduce the time step"
        )
        super().__init__(message)


class SingularSystemError(SimulationError):
    """Exception raised on a zero pivot in the tridiagonal factorization."""


class IdentityNotApplicableError(SimulationError):
    """Exception raised when energy identities are requested for levels that
    do not satisfy the scheme."""


class StabilityViolationError(SimulationError):
    """Exception for a violated necessary stability condition under --strict."""

    def __init__(self, message: str):
        super().__init__(message, exit_code=2)
