"""Factory functions for creating infrastructure components."""

import logging

from ..domain.models.experiments import RunSpec, SolverKind
from ..domain.models.state import RadialState, SimState3D
from ..domain.ports.stepper_port import TimeStepper
from ..domain.ports.writer_port import SeriesWriter
from .persistence.csv_writer import CsvSeriesWriter
from .solvers.cartesian import ExplicitStepper, ImplicitStepper
from .solvers.radial import RadialStepper

logger = logging.getLogger(__name__)


def create_stepper(spec: RunSpec) -> TimeStepper[SimState3D]:
    """Create the Cartesian stepper selected by the run.

    AUTO picks the explicit path when beta = 0.

    Raises:
        ValueError: If the explicit path is requested with beta > 0
    """
    beta = spec.medium.beta
    if spec.solver is SolverKind.EXPLICIT and beta != 0.0:
        raise ValueError("The explicit solver requires beta = 0")

    if spec.solver is SolverKind.IMPLICIT or (spec.solver is SolverKind.AUTO and beta != 0.0):
        stepper: TimeStepper[SimState3D] = ImplicitStepper()
    else:
        stepper = ExplicitStepper()
    logger.debug(f"Using {stepper.name} stepper (beta={beta})")
    return stepper


def create_radial_stepper() -> TimeStepper[RadialState]:
    """Create the radial stepper."""
    return RadialStepper()


def create_writer() -> SeriesWriter:
    """Create the result writer."""
    return CsvSeriesWriter()
