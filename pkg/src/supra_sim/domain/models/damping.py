"""Damping profiles emulating absorbing boundaries."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DampingKind(str, Enum):
    """Supported damping profiles."""

    UNIFORM = "uniform"
    LATTICE_ABSORBING = "lattice_absorbing"
    RADIAL_ABSORBING = "radial_absorbing"


class DampingProfile(BaseModel):
    """Site-local external damping gamma_{m,n,p} or gamma(r).

    Values are always added on top of the medium's gamma baseline.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: DampingKind = DampingKind.UNIFORM
    n0: int | None = Field(default=None, ge=1)
    center: float = 5.5
    width_factor: float = Field(default=8.0, gt=0.0)
    onset: float = 5.0
    outer: float = 6.0

    @model_validator(mode="after")
    def _check_kind_fields(self) -> "DampingProfile":
        if self.kind is DampingKind.LATTICE_ABSORBING and self.n0 is None:
            raise ValueError("lattice_absorbing damping requires n0")
        if self.kind is DampingKind.RADIAL_ABSORBING and not self.onset < self.outer:
            raise ValueError("radial_absorbing damping requires onset < outer")
        return self

    @classmethod
    def uniform(cls) -> "DampingProfile":
        return cls(kind=DampingKind.UNIFORM)

    @classmethod
    def lattice(cls, n0: int) -> "DampingProfile":
        return cls(kind=DampingKind.LATTICE_ABSORBING, n0=n0)

    @classmethod
    def radial(cls) -> "DampingProfile":
        return cls(kind=DampingKind.RADIAL_ABSORBING)
