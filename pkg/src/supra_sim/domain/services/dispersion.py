"""Linear dispersion relation of the lattice and the forbidden band-gap."""

import math


def dispersion_omega_sq(xi: float, zeta: float, eta: float, mass_sq: float) -> float:
    """Squared frequency of the linear mode with wave numbers (xi, zeta, eta).

    omega^2 = m^2 + 1 + 4 (sin^2(xi/2) + sin^2(zeta/2) + sin^2(eta/2))

    Args:
        xi: Wave number along x
        zeta: Wave number along y
        eta: Wave number along z
        mass_sq: Squared relativistic mass

    Returns:
        omega^2
    """
    return (
        mass_sq
        + 1.0
        + 4.0 * (math.sin(xi / 2.0) ** 2 + math.sin(zeta / 2.0) ** 2 + math.sin(eta / 2.0) ** 2)
    )


def band_gap_edge(mass_sq: float) -> float:
    """Lowest linear frequency sqrt(m^2 + 1); 0 when the band reaches zero."""
    return math.sqrt(max(dispersion_omega_sq(0.0, 0.0, 0.0, mass_sq), 0.0))


def in_band_gap(omega: float, mass_sq: float) -> bool:
    """True if a driving frequency lies strictly below the linear band."""
    return 0.0 < omega < band_gap_edge(mass_sq)
