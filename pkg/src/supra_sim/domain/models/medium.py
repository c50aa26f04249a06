"""Physical coefficients of the medium and the potential selection."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class PotentialName(str, Enum):
    """Supported potentials V(u)."""

    SINE_GORDON = "sine_gordon"
    KLEIN_GORDON = "klein_gordon"
    LANDAU_GINZBURG = "landau_ginzburg"
    ZERO = "zero"


class PotentialKind(BaseModel):
    """Potential selection; Landau-Ginzburg carries its coefficient lambda."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    kind: PotentialName = PotentialName.SINE_GORDON
    lam: float | None = Field(default=None, alias="lambda")

    @model_validator(mode="after")
    def _check_lambda(self) -> "PotentialKind":
        if self.kind is PotentialName.LANDAU_GINZBURG:
            if self.lam is None or not self.lam > 0:
                raise ValueError("landau_ginzburg potential requires lambda > 0")
        elif self.lam is not None:
            raise ValueError(f"lambda is only valid for landau_ginzburg, not {self.kind.value}")
        return self

    @classmethod
    def sine_gordon(cls) -> "PotentialKind":
        return cls(kind=PotentialName.SINE_GORDON)

    @classmethod
    def klein_gordon(cls) -> "PotentialKind":
        return cls(kind=PotentialName.KLEIN_GORDON)

    @classmethod
    def landau_ginzburg(cls, lam: float) -> "PotentialKind":
        return cls(kind=PotentialName.LANDAU_GINZBURG, lam=lam)

    @classmethod
    def zero(cls) -> "PotentialKind":
        return cls(kind=PotentialName.ZERO)


class MediumParams(BaseModel):
    """Coefficients of the damped generalized Klein-Gordon family.

    ``coupling`` is the lattice coupling c; it multiplies the non-damping
    Laplacian only and is 1.0 for the continuum discretization.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    beta: float = Field(default=0.0, ge=0.0, description="internal damping")
    gamma: float = Field(default=0.0, ge=0.0, description="external damping baseline")
    mass_sq: float = Field(default=0.0, description="squared relativistic mass")
    josephson: float = Field(default=0.0, ge=0.0, description="generalized Josephson current")
    coupling: float = Field(default=1.0, gt=0.0, description="lattice coupling c")
    potential: PotentialKind = Field(default_factory=PotentialKind.sine_gordon)

    @field_validator("beta", "gamma", "mass_sq", "josephson", "coupling")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @property
    def gap_edge(self) -> float:
        """Upper edge sqrt(m^2 + 1) of the forbidden band-gap (0 if m^2 <= -1)."""
        return math.sqrt(max(self.mass_sq + 1.0, 0.0))
