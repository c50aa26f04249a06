"""Spatial and temporal partitions."""

import math

from pydantic import BaseModel, ConfigDict, Field


class Grid3(BaseModel):
    """Cubic grid with N interior nodes per axis plus one boundary layer on each side.

    Index 0 is the driven (Dirichlet) layer adjacent to the origin and index
    N+1 the Neumann ghost layer, so one level stores (N+2)^3 values.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=1)
    dx: float = Field(default=1.0, gt=0.0)
    dy: float = Field(default=1.0, gt=0.0)
    dz: float = Field(default=1.0, gt=0.0)

    @property
    def size(self) -> int:
        return self.n + 2

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.size, self.size, self.size)

    @property
    def interior_shape(self) -> tuple[int, int, int]:
        return (self.n, self.n, self.n)

    @property
    def steps(self) -> tuple[float, float, float]:
        return (self.dx, self.dy, self.dz)

    @property
    def cell_volume(self) -> float:
        return self.dx * self.dy * self.dz

    @property
    def r_sq(self) -> float:
        """R^2 = 1/dx^2 + 1/dy^2 + 1/dz^2."""
        return 1.0 / self.dx**2 + 1.0 / self.dy**2 + 1.0 / self.dz**2

    @property
    def equal_steps(self) -> bool:
        return self.dx == self.dy == self.dz

    @property
    def unit_steps(self) -> bool:
        return self.dx == self.dy == self.dz == 1.0

    @property
    def length(self) -> float:
        """Side L = (N+1) dx of the cube (meaningful for equal steps)."""
        return (self.n + 1) * self.dx


class TimeGrid(BaseModel):
    """Regular time partition with M steps of size dt."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    dt: float = Field(gt=0.0)
    steps: int = Field(ge=1)

    @property
    def t_end(self) -> float:
        return self.steps * self.dt

    @classmethod
    def covering(cls, dt: float, t_end: float) -> "TimeGrid":
        """Smallest grid with step dt reaching t_end."""
        return cls(dt=dt, steps=max(1, math.ceil(t_end / dt - 1e-9)))
