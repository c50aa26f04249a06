"""Domain models."""

from .damping import DampingKind, DampingProfile
from .driving import DrivingSignal, SignalKind
from .experiments import BitSignalSpec, RunSpec, ScanSpec, SnapshotField, SolverKind, SweepSpec
from .grid import Grid3, TimeGrid
from .medium import MediumParams, PotentialKind, PotentialName
from .numerics import NewtonSettings
from .radial import OuterBoundaryMode, RadialParams
from .reports import EnergyReport, ExperimentResult, SiteSeries, StabilityReport
from .state import FieldLevel, RadialState, SimState3D

__all__ = [
    "BitSignalSpec",
    "DampingKind",
    "DampingProfile",
    "DrivingSignal",
    "EnergyReport",
    "ExperimentResult",
    "FieldLevel",
    "Grid3",
    "MediumParams",
    "NewtonSettings",
    "OuterBoundaryMode",
    "PotentialKind",
    "PotentialName",
    "RadialParams",
    "RadialState",
    "RunSpec",
    "ScanSpec",
    "SignalKind",
    "SimState3D",
    "SiteSeries",
    "SnapshotField",
    "SolverKind",
    "StabilityReport",
    "SweepSpec",
    "TimeGrid",
]
