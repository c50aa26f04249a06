"""Time-level containers owned by a single simulation driver."""

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from .damping import DampingProfile
from .driving import DrivingSignal
from .grid import Grid3, TimeGrid
from .medium import MediumParams
from .radial import RadialParams

FieldLevel = npt.NDArray[np.float64]


@dataclass
class SimState3D:
    """Two rolling levels (k-1, k) of the Cartesian field."""

    prev: FieldLevel
    curr: FieldLevel
    k: int
    params: MediumParams
    grid: Grid3
    time: TimeGrid
    damping: DampingProfile
    signal: DrivingSignal
    gamma_field: FieldLevel | None = field(default=None, repr=False)

    @property
    def t(self) -> float:
        return self.k * self.time.dt


@dataclass
class RadialState:
    """Two rolling levels of v over j = 0..M+1.

    ``k`` may be negative while the warmup ramp runs before t = 0.
    """

    prev: FieldLevel
    curr: FieldLevel
    k: int
    params: RadialParams
    dt: float

    @property
    def t(self) -> float:
        return self.k * self.dt
