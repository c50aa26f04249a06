"""Jump, smoothness and peak statistics over experiment outputs."""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import find_peaks

# Floor of the peak background so an all-zero series yields no peaks.
BACKGROUND_FLOOR = 1e-12


@dataclass(frozen=True)
class JumpReport:
    """Adjacent ratios of an energy curve and where the largest one sits."""

    ratios: list[float]
    pairs: list[tuple[float, float]]
    threshold: float
    max_ratio: float | None = None
    location: tuple[float, float] | None = None

    @property
    def jumps(self) -> list[tuple[float, float]]:
        return [p for p, r in zip(self.pairs, self.ratios, strict=True) if r >= self.threshold]

    @property
    def jump_count(self) -> int:
        return len(self.jumps)

    @property
    def unique(self) -> bool:
        return self.jump_count == 1


def adjacent_ratios(
    amplitudes: Sequence[float],
    energies: Sequence[float],
    normalize_by_amplitude: bool = True,
) -> tuple[list[float], list[tuple[float, float]]]:
    """Ratios of consecutive usable points.

    With normalization each energy is divided by A^2 first. Points with A = 0
    (when normalizing), a non-positive or non-finite energy are skipped.
    """
    points: list[tuple[float, float]] = []
    for a, e in zip(amplitudes, energies, strict=True):
        if e is None or not np.isfinite(e) or e <= 0.0:
            continue
        if normalize_by_amplitude:
            if a == 0.0:
                continue
            e = e / a**2
        points.append((a, e))

    ratios = [right[1] / left[1] for left, right in zip(points, points[1:], strict=False)]
    pairs = [(left[0], right[0]) for left, right in zip(points, points[1:], strict=False)]
    return ratios, pairs


def detect_jump(
    amplitudes: Sequence[float],
    energies: Sequence[float],
    threshold: float = 3.0,
    normalize_by_amplitude: bool = True,
) -> JumpReport:
    """Locate the largest adjacent ratio of an energy-versus-amplitude curve."""
    ratios, pairs = adjacent_ratios(amplitudes, energies, normalize_by_amplitude)
    if not ratios:
        return JumpReport(ratios=[], pairs=[], threshold=threshold)
    best = int(np.argmax(ratios))
    return JumpReport(
        ratios=ratios,
        pairs=pairs,
        threshold=threshold,
        max_ratio=ratios[best],
        location=pairs[best],
    )


@dataclass(frozen=True)
class PeakTable:
    """Peaks of a sampled local energy."""

    times: list[float] = field(default_factory=list)
    heights: list[float] = field(default_factory=list)
    background: float = 0.0

    @property
    def count(self) -> int:
        return len(self.times)

    @property
    def spacings(self) -> list[float]:
        return [b - a for a, b in zip(self.times, self.times[1:], strict=False)]


def detect_peaks(
    times: Sequence[float],
    values: Sequence[float],
    window: int,
    factor: float = 10.0,
) -> PeakTable:
    """Local maxima separated by at least ``window`` samples.

    A peak must rise above ``factor`` times the background (median of |values|)
    both in height and in prominence.
    """
    data = np.asarray(values, dtype=np.float64)
    if data.size < 3:
        return PeakTable()
    background = max(float(np.median(np.abs(data))), BACKGROUND_FLOOR)
    level = factor * background
    indices, props = find_peaks(data, height=level, prominence=level, distance=max(1, window))
    t = np.asarray(times, dtype=np.float64)
    return PeakTable(
        times=[float(t[i]) for i in indices],
        heights=[float(h) for h in props["peak_heights"]],
        background=background,
    )
