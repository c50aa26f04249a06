"""Domain ports."""

from .stepper_port import TimeStepper
from .writer_port import SeriesWriter

__all__ = ["SeriesWriter", "TimeStepper"]
