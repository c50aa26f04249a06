"""Run and experiment specifications."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from ..services.validators import BandGapValidator, SequenceValidator
from .damping import DampingProfile
from .driving import DrivingSignal
from .grid import Grid3, TimeGrid
from .medium import MediumParams, PotentialName
from .numerics import NewtonSettings
from .radial import RadialParams

Site = tuple[int, int, int]


class SolverKind(str, Enum):
    """Cartesian stepping path; AUTO picks explicit when beta = 0."""

    AUTO = "auto"
    EXPLICIT = "explicit"
    IMPLICIT = "implicit"


class SnapshotField(str, Enum):
    """Quantity written by scheduled snapshots."""

    FIELD = "u"
    ENERGY = "energy"


def _check_site(site: Site | None, grid: Grid3) -> None:
    if site is not None and any(not 1 <= q <= grid.n for q in site):
        raise ValueError(f"monitor_site {site} is not interior to [1, {grid.n}]^3")


class RunSpec(BaseModel):
    """Everything one Cartesian simulation needs."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    medium: MediumParams = Field(default_factory=MediumParams)
    grid: Grid3
    time: TimeGrid
    damping: DampingProfile = Field(default_factory=DampingProfile.uniform)
    signal: DrivingSignal = Field(default_factory=DrivingSignal)
    solver: SolverKind = SolverKind.AUTO
    newton: NewtonSettings = Field(default_factory=NewtonSettings)
    lattice: bool = False
    monitor_site: Site | None = None
    sample_every: int = Field(default=1, ge=1)
    snapshot_times: tuple[float, ...] = ()
    snapshot_field: SnapshotField = SnapshotField.FIELD

    @model_validator(mode="after")
    def _check_geometry(self) -> "RunSpec":
        if self.lattice and not self.grid.unit_steps:
            raise ValueError("lattice mode requires dx = dy = dz = 1")
        _check_site(self.monitor_site, self.grid)
        if self.solver is SolverKind.EXPLICIT and self.medium.beta != 0.0:
            raise ValueError("solver=explicit requires beta = 0")
        return self

    @property
    def site(self) -> Site:
        """Monitor site, defaulting to the cube centre."""
        if self.monitor_site is not None:
            return self.monitor_site
        centre = (self.grid.n + 1) // 2
        return (centre, centre, centre)


class SweepSpec(BaseModel):
    """Amplitude sweep at a fixed band-gap frequency."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega: float = Field(gt=0.0)
    amplitudes: tuple[float, ...]
    t_end: float = Field(gt=0.0)
    dt: float = Field(gt=0.0)
    grid: Grid3
    medium: MediumParams = Field(default_factory=MediumParams)
    damping: DampingProfile = Field(default_factory=DampingProfile.uniform)
    monitor_site: Site | None = None
    ramp_periods: float = Field(default=10.0, ge=0.0)
    solver: SolverKind = SolverKind.AUTO
    newton: NewtonSettings = Field(default_factory=NewtonSettings)
    lattice: bool = False
    jump_threshold: float = Field(default=3.0, gt=1.0)
    normalize_by_amplitude: bool = True

    @field_validator("amplitudes")
    @classmethod
    def _increasing(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        return tuple(SequenceValidator.strictly_increasing(values, "amplitudes"))

    @model_validator(mode="after")
    def _check_band_gap(self) -> "SweepSpec":
        BandGapValidator.validate(self.omega, self.medium.mass_sq)
        _check_site(self.monitor_site, self.grid)
        return self

    def run_spec(self, amplitude: float) -> RunSpec:
        """Run of one sweep point."""
        return RunSpec(
            medium=self.medium,
            grid=self.grid,
            time=TimeGrid.covering(self.dt, self.t_end),
            damping=self.damping,
            signal=DrivingSignal.ramped_sine(amplitude, self.omega, self.ramp_periods),
            solver=self.solver,
            newton=self.newton,
            lattice=self.lattice,
            monitor_site=self.monitor_site,
            sample_every=max(1, round(1.0 / self.dt)),
        )


class ScanSpec(BaseModel):
    """Grid of (omega, amplitude) radial runs."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega_values: tuple[float, ...]
    amplitude_values: tuple[float, ...]
    radial: RadialParams = Field(default_factory=RadialParams)
    dt: float = Field(default=0.02, gt=0.0)
    t_end: float = Field(default=20.0, gt=0.0)
    ramp_periods: float = Field(default=2.0, ge=0.0)
    smooth_bound: float = Field(default=1.5, gt=1.0)
    normalize_by_amplitude: bool = True
    newton: NewtonSettings = Field(default_factory=NewtonSettings)

    @field_validator("omega_values", "amplitude_values")
    @classmethod
    def _increasing(cls, values: tuple[float, ...], info: ValidationInfo) -> tuple[float, ...]:
        return tuple(SequenceValidator.strictly_increasing(values, info.field_name))

    @model_validator(mode="after")
    def _check_potential(self) -> "ScanSpec":
        kind = self.radial.medium.potential.kind
        if kind not in (PotentialName.SINE_GORDON, PotentialName.KLEIN_GORDON):
            raise ValueError(f"radial scans support sine_gordon and klein_gordon, not {kind.value}")
        return self

    def radial_params(self, omega: float, amplitude: float) -> RadialParams:
        """Radial parameters of one scan point, with the ramp run before t = 0."""
        signal = DrivingSignal.ramped_sine(amplitude, omega, self.ramp_periods, warmup=True)
        return self.radial.model_copy(update={"signal": signal})


class BitSignalSpec(BaseModel):
    """Transmission of a binary sequence through the cube."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    bits: tuple[int, ...] = Field(min_length=1)
    period: float = Field(gt=0.0)
    amp_factor: float = Field(gt=0.0)
    omega: float = Field(gt=0.0)
    dt: float = Field(gt=0.0)
    grid: Grid3
    medium: MediumParams = Field(default_factory=MediumParams)
    damping: DampingProfile = Field(default_factory=DampingProfile.uniform)
    monitor_site: Site | None = None
    t_end: float | None = Field(default=None, gt=0.0)
    peak_factor: float = Field(default=10.0, gt=0.0)
    solver: SolverKind = SolverKind.AUTO
    newton: NewtonSettings = Field(default_factory=NewtonSettings)
    lattice: bool = True
    snapshot_times: tuple[float, ...] = ()
    snapshot_field: SnapshotField = SnapshotField.ENERGY

    @model_validator(mode="after")
    def _check_monitor(self) -> "BitSignalSpec":
        _check_site(self.monitor_site, self.grid)
        return self

    @property
    def signal(self) -> DrivingSignal:
        return DrivingSignal.bit_sequence(self.bits, self.omega, self.period, self.amp_factor)

    @property
    def duration(self) -> float:
        return self.t_end if self.t_end is not None else len(self.bits) * self.period

    def run_spec(self) -> RunSpec:
        return RunSpec(
            medium=self.medium,
            grid=self.grid,
            time=TimeGrid.covering(self.dt, self.duration),
            damping=self.damping,
            signal=self.signal,
            solver=self.solver,
            newton=self.newton,
            lattice=self.lattice,
            monitor_site=self.monitor_site,
            sample_every=max(1, round(1.0 / self.dt)),
            snapshot_times=self.snapshot_times,
            snapshot_field=self.snapshot_field,
        )
