"""Application layer initialization."""

from .use_cases import (
    CheckStabilityUseCase,
    RadialScanUseCase,
    RunSimulationUseCase,
    SupraSweepUseCase,
    TransmitBitsUseCase,
)

__all__ = [
    "CheckStabilityUseCase",
    "RadialScanUseCase",
    "RunSimulationUseCase",
    "SupraSweepUseCase",
    "TransmitBitsUseCase",
]
