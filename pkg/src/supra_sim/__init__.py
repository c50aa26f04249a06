"""Energy-consistent finite-difference simulator for damped nonlinear Klein-Gordon media."""

__version__ = "0.1.0"
