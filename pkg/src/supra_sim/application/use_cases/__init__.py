"""Use cases initialization."""

from .check_stability import CheckStabilityUseCase
from .radial_scan import RadialScanUseCase, run_radial
from .run_simulation import RunOutput, RunSimulationUseCase
from .supra_sweep import SupraSweepUseCase, refine_threshold
from .transmit_bits import TransmitBitsUseCase

__all__ = [
    "CheckStabilityUseCase",
    "RadialScanUseCase",
    "RunOutput",
    "RunSimulationUseCase",
    "SupraSweepUseCase",
    "TransmitBitsUseCase",
    "refine_threshold",
    "run_radial",
]
