"""Parameters of the radially symmetric problem in v(r, t) = r u(r, t)."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from .damping import DampingProfile
from .driving import DrivingSignal
from .medium import MediumParams


class OuterBoundaryMode(str, Enum):
    """Discretization of dv/dr + v/r = 0 at the outer radius."""

    CONSISTENT = "consistent"
    AS_PRINTED = "as_printed"


class RadialParams(BaseModel):
    """Radial grid r_j = epsilon + j dr, j = 0..M+1, plus the physics."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    epsilon: float = Field(default=0.02, gt=0.0)
    dr: float = Field(default=0.02, gt=0.0)
    m_nodes: int = Field(default=298, ge=1)
    medium: MediumParams = Field(default_factory=MediumParams)
    damping: DampingProfile = Field(default_factory=DampingProfile.radial)
    signal: DrivingSignal = Field(default_factory=DrivingSignal)
    boundary_mode: OuterBoundaryMode = OuterBoundaryMode.CONSISTENT

    @property
    def outer_radius(self) -> float:
        """L = epsilon + (M+1) dr."""
        return self.epsilon + (self.m_nodes + 1) * self.dr

    @property
    def size(self) -> int:
        return self.m_nodes + 2

    @staticmethod
    def nodes_for(epsilon: float, dr: float, outer_radius: float) -> int:
        """Interior node count M such that epsilon + (M+1) dr = outer_radius."""
        return max(1, round((outer_radius - epsilon) / dr) - 1)
