"""Evaluation of the boundary driving phi(t)."""

import math

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from ..models.driving import DrivingSignal, SignalKind

# Decay constants of the single-bit envelope.
SLOW_DECAY = 2.5
FAST_DECAY = 0.45


def bit_envelope(t: float | npt.NDArray[np.float64], omega: float, bit: int, amp_factor: float):
    """Single-bit amplitude A0(t; b) = C b (exp(-omega t / 2.5) - exp(-omega t / 0.45)).

    Args:
        t: Time(s) measured from the start of the bit window
        omega: Driving frequency
        bit: Transmitted bit (0 or 1)
        amp_factor: Amplification factor C

    Returns:
        Envelope value(s)
    """
    return amp_factor * bit * (np.exp(-omega * t / SLOW_DECAY) - np.exp(-omega * t / FAST_DECAY))


def bit_envelope_peak_time(omega: float) -> float:
    """Time at which the single-bit envelope reaches its maximum.

    Args:
        omega: Driving frequency

    Returns:
        argmax of A0(t; 1), about 1.0456 for omega = 0.9
    """
    upper = 10.0 * SLOW_DECAY / omega
    result = minimize_scalar(
        lambda t: -bit_envelope(t, omega, 1, 1.0),
        bounds=(0.0, upper),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(result.x)


def bit_amplitude(signal: DrivingSignal, t: float | npt.NDArray[np.float64]):
    """Windowed amplitude A(t): one envelope per bit over [(i-1)P, iP)."""
    if signal.period is None or signal.amp_factor is None:
        return np.zeros_like(np.asarray(t, dtype=np.float64))

    t_arr = np.asarray(t, dtype=np.float64)
    bits = np.asarray(signal.bits, dtype=np.float64)
    window = np.floor(t_arr / signal.period).astype(np.int64)
    inside = (t_arr >= 0.0) & (window < len(bits))
    slot = np.clip(window, 0, len(bits) - 1)
    local = t_arr - slot * signal.period
    envelope = bit_envelope(local, signal.frequency, 1, signal.amp_factor) * bits[slot]
    return np.where(inside, envelope, 0.0)


def eval_driving(signal: DrivingSignal, t: float | npt.NDArray[np.float64]):
    """Evaluate the driving function phi(t).

    RampedSine: min(1, max(0, t + warmup) / ramp) * A * sin(omega t), ratio 1 when
    the ramp duration is zero. BitSequence: A(t) sin(omega t).

    Args:
        signal: Driving definition
        t: Time(s), possibly negative during a warmup

    Returns:
        phi(t) as a float for scalar input, an array otherwise
    """
    t_arr = np.asarray(t, dtype=np.float64)
    carrier = np.sin(signal.frequency * t_arr)

    if signal.kind is SignalKind.BIT_SEQUENCE:
        value = bit_amplitude(signal, t_arr) * carrier
    else:
        if signal.ramp_duration > 0.0:
            ratio = np.minimum(1.0, np.maximum(0.0, t_arr + signal.warmup) / signal.ramp_duration)
        else:
            ratio = np.ones_like(t_arr)
        value = ratio * signal.amplitude * carrier

    return float(value) if np.ndim(value) == 0 else value


def samples_per_period(signal: DrivingSignal, dt: float) -> int:
    """Number of time steps covering one driving period (at least 1)."""
    return max(1, math.ceil(signal.driving_period / dt))
