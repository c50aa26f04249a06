"""Tests for the Jacobi iteration."""

import logging

import numpy as np
import pytest

from src.supra_sim.domain.exceptions import LinearSolverError
from src.supra_sim.infrastructure.solvers.linear import jacobi_solve


def _neighbors(weight: float):
    def product(x: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x)
        out[1:] += weight * x[:-1]
        out[:-1] += weight * x[1:]
        return out

    return product


class TestJacobiSolve:
    """Tests for jacobi_solve."""

    def test_converges(self, rng):
        """Test a dominant chain system against a dense solve."""
        n = 12
        diag = np.full(n, 4.0)
        rhs = rng.normal(size=n)
        x = jacobi_solve(diag, _neighbors(-1.0), rhs, tol=1e-14, max_iters=500)

        matrix = np.diag(diag) - np.eye(n, k=1) - np.eye(n, k=-1)
        assert np.allclose(x, np.linalg.solve(matrix, rhs), rtol=0.0, atol=1e-12)

    def test_zero_rhs(self):
        """Test that a zero right-hand side returns zero without sweeping."""
        x = jacobi_solve(np.full(4, 2.0), _neighbors(-1.0), np.zeros(4), 1e-14, 10)
        assert np.all(x == 0.0)

    def test_divergence_raises(self):
        """Test that a growing residual is reported as stagnation."""
        with pytest.raises(LinearSolverError) as exc_info:
            jacobi_solve(np.ones(3), lambda x: 2.0 * x, np.ones(3), 1e-14, 500)
        assert exc_info.value.iterations == 50

    def test_sweep_cap_warns(self, caplog):
        """Test that the cap returns the last iterate with a warning."""
        with caplog.at_level(logging.WARNING):
            x = jacobi_solve(np.ones(3), lambda x: 0.9 * x, np.ones(3), 1e-14, 5)
        assert np.all(np.isfinite(x))
        assert "sweep cap" in caplog.text
