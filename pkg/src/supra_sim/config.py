"""Configuration settings for the simulator."""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .domain.models.numerics import NewtonSettings


class Settings(BaseSettings):
    """Environment settings (prefix SUPRA_); CLI flags take precedence."""

    model_config = SettingsConfigDict(
        env_prefix="SUPRA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Environment
    environment: str = Field(default="development")
    log_level: str = Field(default="INFO")

    # Runs
    threads: int = Field(default=1, ge=1)
    output_dir: Path = Field(default=Path("./out"))
    strict: bool = Field(default=False)

    # Newton / linear iteration defaults
    newton_tol: float = Field(default=1e-12, gt=0.0)
    newton_max_iters: int = Field(default=50, ge=1)
    linear_tol: float = Field(default=1e-14, gt=0.0)
    linear_max_iters: int = Field(default=500, ge=1)

    def newton_settings(self) -> NewtonSettings:
        """Newton settings filled from the environment."""
        return NewtonSettings(
            tol_residual=self.newton_tol,
            max_iters=self.newton_max_iters,
            linear_tol=self.linear_tol,
            linear_max_iters=self.linear_max_iters,
        )

