"""Iteration settings for the nonlinear and linear solves."""

from pydantic import BaseModel, ConfigDict, Field


class NewtonSettings(BaseModel):
    """Tolerances and iteration caps for Newton and the inner linear iteration."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tol_residual: float = Field(default=1e-12, gt=0.0)
    max_iters: int = Field(default=50, ge=1)
    linear_tol: float = Field(default=1e-14, gt=0.0)
    linear_max_iters: int = Field(default=500, ge=1)
