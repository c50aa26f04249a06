"""Crout factorization for tridiagonal systems."""

import numpy as np
import numpy.typing as npt
from numba import njit

from ...domain.exceptions import SingularSystemError

Vector = npt.NDArray[np.float64]


@njit(cache=True)
def _crout(lower, diag, upper, rhs):
    """Factor A = L U with unit upper U and solve A x = rhs.

    Parameters
    ----------
    lower : ndarray
        Sub-diagonal (0, a_2, ..., a_n).
    diag : ndarray
        Main diagonal (b_1, ..., b_n).
    upper : ndarray
        Super-diagonal (c_1, ..., c_{n-1}, 0).
    rhs : ndarray
        Right-hand side.

    Returns
    -------
    x : ndarray
        Solution, meaningful only when ``pivot`` is -1.
    pivot : int
        Index of the first zero pivot, or -1.
    """
    n = len(rhs)
    u = np.empty(n)
    z = np.empty(n)
    x = np.empty(n)

    pivot = diag[0]
    if pivot == 0.0:
        return x, 0
    u[0] = upper[0] / pivot
    z[0] = rhs[0] / pivot

    for i in range(1, n):
        pivot = diag[i] - lower[i] * u[i - 1]
        if pivot == 0.0:
            return x, i
        u[i] = upper[i] / pivot
        z[i] = (rhs[i] - lower[i] * z[i - 1]) / pivot

    x[n - 1] = z[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = z[i] - u[i] * x[i + 1]

    return x, -1


def solve_tridiagonal(lower: Vector, diag: Vector, upper: Vector, rhs: Vector) -> Vector:
    """Solve a tridiagonal system by Crout factorization.

    Args:
        lower: Sub-diagonal, first entry ignored
        diag: Main diagonal
        upper: Super-diagonal, last entry ignored
        rhs: Right-hand side

    Returns:
        Solution vector

    Raises:
        SingularSystemError: On a zero pivot
    """
    x, pivot = _crout(
        np.ascontiguousarray(lower, dtype=np.float64),
        np.ascontiguousarray(diag, dtype=np.float64),
        np.ascontiguousarray(upper, dtype=np.float64),
        np.ascontiguousarray(rhs, dtype=np.float64),
    )
    if pivot >= 0:
        raise SingularSystemError(f"Zero pivot at row {pivot} of the tridiagonal system")
    return x
