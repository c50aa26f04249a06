"""Diagnostic reports and experiment results."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class EnergyReport:
    """Discrete energy balance at one step.

    residual = |rate_lhs - rate_rhs|. The radial report also carries the
    residuals of the verbatim printed energy, raw and scaled by pi/2.
    """

    e_curr: float
    e_prev: float
    rate_lhs: float
    rate_rhs: float
    residual: float
    printed_raw_residual: float | None = None
    printed_scaled_residual: float | None = None

    @property
    def relative_residual(self) -> float:
        return self.residual / max(1.0, abs(self.e_curr), abs(self.rate_lhs))


@dataclass
class SiteSeries:
    """Hamiltonian history of one lattice site sampled every dt."""

    site: tuple[int, int, int]
    dt: float
    times: list[float] = field(default_factory=list)
    hamiltonian: list[float] = field(default_factory=list)

    def append(self, t: float, h: float) -> None:
        self.times.append(t)
        self.hamiltonian.append(h)

    @property
    def integral(self) -> float:
        """Left-endpoint Riemann sum of H over the recorded samples."""
        return float(sum(self.hamiltonian) * self.dt)


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of a necessary stability condition lhs < rhs."""

    lhs: float
    rhs: float
    r_sq: float | None = None
    corollary_lhs: float | None = None
    note: str = ""

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def satisfied(self) -> bool:
        return self.margin > 0.0


@dataclass
class ExperimentResult:
    """Tabular experiment output plus run metadata."""

    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def column(self, name: str) -> list[Any]:
        return [row[name] for row in self.rows]
