"""Boundary driving signals phi(t)."""

import logging
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

logger = logging.getLogger(__name__)

PERIOD_MULTIPLE_RTOL = 1e-9


class SignalKind(str, Enum):
    """Supported driving signals."""

    RAMPED_SINE = "ramped_sine"
    BIT_SEQUENCE = "bit_sequence"


class DrivingSignal(BaseModel):
    """Driving function applied on the boundary faces (or at r = epsilon).

    RampedSine: phi(t) = min(1, max(0, t + warmup) / ramp) * A * sin(Omega t).
    BitSequence: phi(t) = A(t) sin(Omega t), one envelope window of length P per bit.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: SignalKind = SignalKind.RAMPED_SINE
    amplitude: float = Field(default=0.0, ge=0.0)
    frequency: float = Field(default=0.9, gt=0.0)
    ramp_duration: float = Field(default=0.0, ge=0.0)
    warmup: float = Field(default=0.0, ge=0.0)
    bits: tuple[int, ...] = ()
    period: float | None = Field(default=None, gt=0.0)
    amp_factor: float | None = Field(default=None, gt=0.0)

    @model_validator(mode="after")
    def _check_kind_fields(self) -> "DrivingSignal":
        if self.kind is SignalKind.RAMPED_SINE:
            if self.bits or self.period is not None or self.amp_factor is not None:
                raise ValueError("bits, period and amp_factor require kind=bit_sequence")
            return self

        if not self.bits:
            raise ValueError("bit_sequence requires a nonempty bits list")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")
        if self.period is None or self.amp_factor is None:
            raise ValueError("bit_sequence requires period and amp_factor")

        cycles = self.period * self.frequency / (2.0 * math.pi)
        off_grid = abs(cycles - round(cycles)) > PERIOD_MULTIPLE_RTOL * max(1.0, cycles)
        if off_grid or round(cycles) < 1:
            logger.warning(
                "Bit period is not a whole number of driving periods",
                extra={"period": self.period, "cycles": cycles},
            )
        return self

    @property
    def driving_period(self) -> float:
        return 2.0 * math.pi / self.frequency

    @property
    def duration(self) -> float:
        """Time span covered by the bit windows (0 for ramped sine)."""
        if self.kind is SignalKind.BIT_SEQUENCE and self.period is not None:
            return len(self.bits) * self.period
        return 0.0

    @classmethod
    def ramped_sine(
        cls,
        amplitude: float,
        frequency: float,
        ramp_periods: float = 10.0,
        warmup: bool = False,
    ) -> "DrivingSignal":
        """Ramped sine whose ramp lasts ``ramp_periods`` driving periods.

        With ``warmup`` the ramp is placed before t = 0.
        """
        ramp = ramp_periods * 2.0 * math.pi / frequency
        return cls(
            kind=SignalKind.RAMPED_SINE,
            amplitude=amplitude,
            frequency=frequency,
            ramp_duration=ramp,
            warmup=ramp if warmup else 0.0,
        )

    @classmethod
    def bit_sequence(
        cls,
        bits: list[int] | tuple[int, ...],
        frequency: float,
        period: float,
        amp_factor: float,
    ) -> "DrivingSignal":
        return cls(
            kind=SignalKind.BIT_SEQUENCE,
            frequency=frequency,
            bits=tuple(bits),
            period=period,
            amp_factor=amp_factor,
        )
