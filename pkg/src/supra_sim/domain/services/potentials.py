"""Potentials V(u), their derivatives and the energy-preserving difference quotient.

All functions accept floats or numpy arrays and broadcast elementwise.
"""

import numpy as np
import numpy.typing as npt

from ..models.medium import MediumParams, PotentialKind, PotentialName

ArrayLike = float | npt.NDArray[np.float64]

QUOTIENT_TOL = 1e-12
# Below this relative separation the quotient derivative switches to its Taylor form.
_DERIV_SWITCH = 1e-4


def potential_value(kind: PotentialKind, u: ArrayLike) -> ArrayLike:
    """Evaluate V(u) for the selected potential.

    Args:
        kind: Potential selection
        u: Field value(s)

    Returns:
        V(u)
    """
    match kind.kind:
        case PotentialName.SINE_GORDON:
            return 1.0 - np.cos(u)
        case PotentialName.KLEIN_GORDON:
            u2 = np.multiply(u, u)
            return u2 / 2.0 - u2 * u2 / 24.0
        case PotentialName.LANDAU_GINZBURG:
            u2 = np.multiply(u, u)
            return kind.lam * u2 * u2
        case _:
            return np.zeros_like(u, dtype=np.float64) if isinstance(u, np.ndarray) else 0.0


def potential_deriv(kind: PotentialKind, u: ArrayLike) -> ArrayLike:
    """Evaluate V'(u)."""
    match kind.kind:
        case PotentialName.SINE_GORDON:
            return np.sin(u)
        case PotentialName.KLEIN_GORDON:
            return u - np.power(u, 3) / 6.0
        case PotentialName.LANDAU_GINZBURG:
            return 4.0 * kind.lam * np.power(u, 3)
        case _:
            return np.zeros_like(u, dtype=np.float64) if isinstance(u, np.ndarray) else 0.0


def potential_second_deriv(kind: PotentialKind, u: ArrayLike) -> ArrayLike:
    """Evaluate V''(u)."""
    match kind.kind:
        case PotentialName.SINE_GORDON:
            return np.cos(u)
        case PotentialName.KLEIN_GORDON:
            return 1.0 - np.multiply(u, u) / 2.0
        case PotentialName.LANDAU_GINZBURG:
            return 12.0 * kind.lam * np.multiply(u, u)
        case _:
            return np.zeros_like(u, dtype=np.float64) if isinstance(u, np.ndarray) else 0.0


def _potential_third_deriv(kind: PotentialKind, u: ArrayLike) -> ArrayLike:
    match kind.kind:
        case PotentialName.SINE_GORDON:
            return -np.sin(u)
        case PotentialName.KLEIN_GORDON:
            return -np.asarray(u, dtype=np.float64) if isinstance(u, np.ndarray) else -u
        case PotentialName.LANDAU_GINZBURG:
            return 24.0 * kind.lam * np.asarray(u)
        case _:
            return np.zeros_like(u, dtype=np.float64) if isinstance(u, np.ndarray) else 0.0


def _separation(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    return np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))


def potential_quotient(
    kind: PotentialKind,
    a: ArrayLike,
    b: ArrayLike,
    tol: float = QUOTIENT_TOL,
) -> ArrayLike:
    """Difference quotient (V(a) - V(b)) / (a - b) with its analytic limit.

    When |a - b| <= tol * max(1, |a|, |b|) the quotient is replaced by
    V'((a + b) / 2). The result is exactly symmetric in (a, b).

    Args:
        kind: Potential selection
        a: First argument (the k+1 level in the schemes)
        b: Second argument (the k-1 level)
        tol: Relative separation below which the limit is used

    Returns:
        The quotient, elementwise
    """
    a_arr = np.asarray(a, dtype=np.float64)
    b_arr = np.asarray(b, dtype=np.float64)
    diff = a_arr - b_arr
    close = np.abs(diff) <= tol * _separation(a_arr, b_arr)
    safe = np.where(close, 1.0, diff)
    quotient = (potential_value(kind, a_arr) - potential_value(kind, b_arr)) / safe
    limit = potential_deriv(kind, 0.5 * (a_arr + b_arr))
    result = np.where(close, limit, quotient)
    return float(result) if result.ndim == 0 else result


def potential_quotient_deriv(
    kind: PotentialKind,
    a: ArrayLike,
    b: ArrayLike,
    tol: float = QUOTIENT_TOL,
) -> ArrayLike:
    """Partial derivative of the difference quotient with respect to ``a``.

    Exact form [(a - b) V'(a) - (V(a) - V(b))] / (a - b)^2; for close arguments
    the expansion V''(c)/2 + V'''(c)(a - b)/12 about c = (a + b)/2 is used.
    """
    a_arr = np.asarray(a, dtype=np.float64)
    b_arr = np.asarray(b, dtype=np.float64)
    diff = a_arr - b_arr
    close = np.abs(diff) <= max(tol, _DERIV_SWITCH) * _separation(a_arr, b_arr)
    safe = np.where(close, 1.0, diff)
    exact = (
        safe * potential_deriv(kind, a_arr)
        - (potential_value(kind, a_arr) - potential_value(kind, b_arr))
    ) / (safe * safe)
    mid = 0.5 * (a_arr + b_arr)
    series = (
        0.5 * potential_second_deriv(kind, mid) + _potential_third_deriv(kind, mid) * diff / 12.0
    )
    result = np.where(close, series, exact)
    return float(result) if result.ndim == 0 else result


def combined_potential(params: MediumParams, u: ArrayLike) -> ArrayLike:
    """G(u) = m^2 u^2 / 2 + V(u) - J u."""
    return 0.5 * params.mass_sq * np.multiply(u, u) + potential_value(params.potential, u) - (
        params.josephson * np.asarray(u)
    )
