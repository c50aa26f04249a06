"""JSON run document: schema, loading and conversion into run specifications."""

import json
import logging
from collections.abc import Callable
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ...domain.exceptions import ConfigError
from ...domain.models.damping import DampingProfile
from ...domain.models.driving import DrivingSignal, SignalKind
from ...domain.models.experiments import (
    BitSignalSpec,
    RunSpec,
    ScanSpec,
    SnapshotField,
    SolverKind,
    SweepSpec,
)
from ...domain.models.grid import Grid3, TimeGrid
from ...domain.models.medium import MediumParams
from ...domain.models.numerics import NewtonSettings
from ...domain.models.radial import OuterBoundaryMode, RadialParams

logger = logging.getLogger(__name__)

CARTESIAN_RAMP_PERIODS = 10.0
RADIAL_RAMP_PERIODS = 2.0


class Mode(str, Enum):
    """Spatial discretization: continuum (c = 1 by default) or unit-step lattice."""

    CONTINUUM = "continuum"
    LATTICE = "lattice"


class Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DrivingSection(Section):
    """Boundary driving; ramp_periods counts driving periods."""

    kind: SignalKind = SignalKind.RAMPED_SINE
    amplitude: float = Field(default=0.0, ge=0.0)
    frequency: float = Field(default=0.9, gt=0.0)
    ramp_periods: float | None = Field(default=None, ge=0.0)
    warmup: bool = False
    bits: list[int] | None = None
    period: float | None = Field(default=None, gt=0.0)
    amp_factor: float | None = Field(default=None, gt=0.0)

    def cross_errors(self) -> list[str]:
        found = []
        if self.kind is SignalKind.RAMPED_SINE:
            for name in ("bits", "period", "amp_factor"):
                if getattr(self, name) is not None:
                    found.append(f"driving.{name}: only valid with kind=bit_sequence")
        else:
            if not self.bits:
                found.append("driving.bits: bit_sequence requires a nonempty bits list")
            for name in ("period", "amp_factor"):
                if getattr(self, name) is None:
                    found.append(f"driving.{name}: required with kind=bit_sequence")
        return found

    def to_signal(self, default_ramp: float = CARTESIAN_RAMP_PERIODS) -> DrivingSignal:
        if self.kind is SignalKind.BIT_SEQUENCE:
            return DrivingSignal.bit_sequence(
                self.bits or [], self.frequency, self.period or 0.0, self.amp_factor or 0.0
            )
        ramp = default_ramp if self.ramp_periods is None else self.ramp_periods
        return DrivingSignal.ramped_sine(self.amplitude, self.frequency, ramp, self.warmup)


class RadialSection(Section):
    """Radial grid; m_nodes defaults to the count that reaches outer_radius."""

    epsilon: float = Field(default=0.02, gt=0.0)
    dr: float = Field(default=0.02, gt=0.0)
    dt: float | None = Field(default=None, gt=0.0)
    m_nodes: int | None = Field(default=None, ge=1)
    outer_radius: float = Field(default=6.0, gt=0.0)
    boundary_mode: OuterBoundaryMode = OuterBoundaryMode.CONSISTENT
    damping: DampingProfile = Field(default_factory=DampingProfile.radial)

    @model_validator(mode="after")
    def _check_radius(self) -> "RadialSection":
        if not self.outer_radius > self.epsilon:
            raise ValueError("outer_radius must exceed epsilon")
        return self

    @property
    def nodes(self) -> int:
        if self.m_nodes is not None:
            return self.m_nodes
        return RadialParams.nodes_for(self.epsilon, self.dr, self.outer_radius)


class SweepSection(Section):
    amplitudes: list[float]
    omega: float | None = Field(default=None, gt=0.0)
    t_end: float = Field(default=100.0, gt=0.0)
    jump_threshold: float = Field(default=3.0, gt=1.0)
    normalize_by_amplitude: bool = True


class ScanSection(Section):
    omega_values: list[float]
    amplitude_values: list[float]
    t_end: float = Field(default=20.0, gt=0.0)
    smooth_bound: float = Field(default=1.5, gt=1.0)
    normalize_by_amplitude: bool = True


class TransmitSection(Section):
    t_end: float | None = Field(default=None, gt=0.0)
    peak_factor: float = Field(default=10.0, gt=0.0)


class OutputSection(Section):
    dir: Path | None = None
    series_csv: str = "series.csv"
    result_csv: str = "result.csv"
    sample_every: int = Field(default=1, ge=1)
    snapshot_times: list[float] = Field(default_factory=list)
    snapshot_field: SnapshotField = SnapshotField.FIELD
    monitor_site: tuple[int, int, int] | None = None


class ConfigDoc(Section):
    """Complete run document; unknown keys are rejected at every level."""

    mode: Mode = Mode.CONTINUUM
    solver: SolverKind = SolverKind.AUTO
    medium: MediumParams = Field(default_factory=MediumParams)
    grid: Grid3 = Field(default_factory=lambda: Grid3(n=8))
    time: TimeGrid = Field(default_factory=lambda: TimeGrid(dt=0.05, steps=100))
    driving: DrivingSection = Field(default_factory=DrivingSection)
    damping: DampingProfile = Field(default_factory=DampingProfile.uniform)
    newton: NewtonSettings | None = None
    radial: RadialSection | None = None
    sweep: SweepSection | None = None
    scan: ScanSection | None = None
    transmit: TransmitSection | None = None
    output: OutputSection = Field(default_factory=OutputSection)

    def cross_field_errors(self, newton: NewtonSettings | None = None) -> list[str]:
        """All cross-field violations, including re-validation of the built specs."""
        found = self.driving.cross_errors()
        if self.mode is Mode.LATTICE and not self.grid.unit_steps:
            found.append("grid: lattice mode requires dx = dy = dz = 1")
        if found:
            return found

        builders: list[tuple[str, Callable[[NewtonSettings | None], object]]] = [
            ("run", self.run_spec)
        ]
        if self.sweep is not None:
            builders.append(("sweep", self.sweep_spec))
        if self.scan is not None:
            builders.append(("scan", self.scan_spec))
        if self.transmit is not None:
            builders.append(("transmit", self.bit_spec))
        for name, build in builders:
            try:
                build(newton)
            except ValidationError as e:
                found.extend(f"{name}: {message}" for message in format_validation_errors(e))
            except ValueError as e:
                found.append(f"{name}: {e}")
        return found

    def _newton(self, newton: NewtonSettings | None) -> NewtonSettings:
        return self.newton or newton or NewtonSettings()

    def run_spec(self, newton: NewtonSettings | None = None) -> RunSpec:
        return RunSpec(
            medium=self.medium,
            grid=self.grid,
            time=self.time,
            damping=self.damping,
            signal=self.driving.to_signal(),
            solver=self.solver,
            newton=self._newton(newton),
            lattice=self.mode is Mode.LATTICE,
            monitor_site=self.output.monitor_site,
            sample_every=self.output.sample_every,
            snapshot_times=tuple(self.output.snapshot_times),
            snapshot_field=self.output.snapshot_field,
        )

    def sweep_spec(self, newton: NewtonSettings | None = None) -> SweepSpec:
        if self.sweep is None:
            raise ConfigError("The sweep command requires a 'sweep' section")
        return SweepSpec(
            omega=self.sweep.omega or self.driving.frequency,
            amplitudes=tuple(self.sweep.amplitudes),
            t_end=self.sweep.t_end,
            dt=self.time.dt,
            grid=self.grid,
            medium=self.medium,
            damping=self.damping,
            monitor_site=self.output.monitor_site,
            ramp_periods=(
                CARTESIAN_RAMP_PERIODS
                if self.driving.ramp_periods is None
                else self.driving.ramp_periods
            ),
            solver=self.solver,
            newton=self._newton(newton),
            lattice=self.mode is Mode.LATTICE,
            jump_threshold=self.sweep.jump_threshold,
            normalize_by_amplitude=self.sweep.normalize_by_amplitude,
        )

    def radial_params(self) -> RadialParams:
        section = self.radial or RadialSection()
        return RadialParams(
            epsilon=section.epsilon,
            dr=section.dr,
            m_nodes=section.nodes,
            medium=self.medium,
            damping=section.damping,
            signal=self.driving.to_signal(RADIAL_RAMP_PERIODS),
            boundary_mode=section.boundary_mode,
        )

    def radial_dt(self) -> float:
        section = self.radial or RadialSection()
        return section.dt or section.dr

    def scan_spec(self, newton: NewtonSettings | None = None) -> ScanSpec:
        if self.scan is None:
            raise ConfigError("The scan-radial command requires a 'scan' section")
        return ScanSpec(
            omega_values=tuple(self.scan.omega_values),
            amplitude_values=tuple(self.scan.amplitude_values),
            radial=self.radial_params(),
            dt=self.radial_dt(),
            t_end=self.scan.t_end,
            ramp_periods=(
                RADIAL_RAMP_PERIODS
                if self.driving.ramp_periods is None
                else self.driving.ramp_periods
            ),
            smooth_bound=self.scan.smooth_bound,
            normalize_by_amplitude=self.scan.normalize_by_amplitude,
            newton=self._newton(newton),
        )

    def bit_spec(self, newton: NewtonSettings | None = None) -> BitSignalSpec:
        if self.driving.kind is not SignalKind.BIT_SEQUENCE:
            raise ConfigError("The transmit command requires driving.kind = bit_sequence")
        section = self.transmit or TransmitSection()
        return BitSignalSpec(
            bits=tuple(self.driving.bits or ()),
            period=self.driving.period or 0.0,
            amp_factor=self.driving.amp_factor or 0.0,
            omega=self.driving.frequency,
            dt=self.time.dt,
            grid=self.grid,
            medium=self.medium,
            damping=self.damping,
            monitor_site=self.output.monitor_site,
            t_end=section.t_end,
            peak_factor=section.peak_factor,
            solver=self.solver,
            newton=self._newton(newton),
            lattice=self.mode is Mode.LATTICE,
            snapshot_times=tuple(self.output.snapshot_times),
            snapshot_field=self.output.snapshot_field,
        )


def format_validation_errors(error: ValidationError) -> list[str]:
    """One 'path: message' line per pydantic error."""
    lines = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "(document)"
        lines.append(f"{path}: {item['msg']}")
    return lines


def effective_config_json(doc: ConfigDoc) -> str:
    """The document with all defaults filled, loadable by load_config."""
    return doc.model_dump_json(by_alias=True, indent=2)


def parse_config(text: str, source: str = "<string>") -> ConfigDoc:
    """Parse and validate a JSON document.

    Raises:
        ConfigError: With the line and column of a syntax error, or the list
            of every validation error
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{source}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: the configuration must be a JSON object")

    try:
        doc = ConfigDoc.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration {source}", format_validation_errors(e)) from e

    cross = doc.cross_field_errors()
    if cross:
        raise ConfigError(f"Invalid configuration {source}", cross)

    logger.info(f"Effective configuration:\n{effective_config_json(doc)}")
    return doc


def load_config(path: Path | str) -> ConfigDoc:
    """Read and validate a JSON run document.

    Raises:
        ConfigError: If the file is unreadable or invalid
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read configuration {path}: {e.strerror or e}") from e
    return parse_config(text, str(path))
