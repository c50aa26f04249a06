"""Port (interface) for result writers."""

from pathlib import Path
from typing import Protocol

from ..models.reports import ExperimentResult


class SeriesWriter(Protocol):
    """Persist tabular outputs of runs and experiments."""

    def write_result(self, result: ExperimentResult, path: Path) -> Path:
        """Write a result table with a header row.

        Args:
            result: Rows and column order
            path: Destination file

        Returns:
            The path written
        """
        ...
