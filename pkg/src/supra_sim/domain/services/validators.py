"""Domain validators for run inputs and field levels."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ..exceptions import ContractError
from .dispersion import band_gap_edge


class LevelValidator:
    """Validate field levels handed between components."""

    @staticmethod
    def validate(level: npt.NDArray[np.float64], name: str = "level") -> npt.NDArray[np.float64]:
        """Check that a level holds only finite values.

        Args:
            level: Field level
            name: Label used in the error message

        Returns:
            The level unchanged

        Raises:
            ContractError: If any entry is NaN or infinite
        """
        if not np.all(np.isfinite(level)):
            bad = int(np.count_nonzero(~np.isfinite(level)))
            raise ContractError(f"{name} contains {bad} non-finite values")
        return level


class SequenceValidator:
    """Validate ordered parameter lists of sweeps and scans."""

    @classmethod
    def strictly_increasing(cls, values: Sequence[float], name: str) -> list[float]:
        """Return the values as a list if they are nonempty and strictly increasing.

        Raises:
            ValueError: If the list is empty or not strictly increasing
        """
        items = [float(v) for v in values]
        if not items:
            raise ValueError(f"{name} must not be empty")
        for left, right in zip(items, items[1:], strict=False):
            if not right > left:
                raise ValueError(f"{name} must be strictly increasing ({left} then {right})")
        return items


class BandGapValidator:
    """Validate driving frequencies against the linear band."""

    @staticmethod
    def validate(omega: float, mass_sq: float) -> float:
        """Check 0 < omega < sqrt(m^2 + 1).

        Raises:
            ValueError: If the frequency lies outside the forbidden band-gap
        """
        edge = band_gap_edge(mass_sq)
        if not 0.0 < omega < edge:
            raise ValueError(
                f"Driving frequency {omega} is not in the forbidden band-gap (0, {edge:.6g})"
            )
        return omega
