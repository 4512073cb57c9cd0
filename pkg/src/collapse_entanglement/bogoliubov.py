"""Closed-form Bogoliubov coefficients between past and future mode bases.

alpha(omega, Omega) = -(1/2pi) sqrt(Omega/omega) (4m)^{-4 i m omega}
                      e^{-i (omega - Omega) v_h} (-i Omega)^{-1 - 4 i m omega}
                      Gamma(1 + 4 i m omega)

with the principal branch (-i Omega)^z := exp(z (ln Omega - i pi/2)).  That
branch makes |(-i Omega)^{-4 i m omega}| = e^{-2 pi m omega}, which is the
value required for |beta/alpha| = tanh r_omega = e^{-4 pi m omega}.

beta, gamma, delta are computed from alpha (not from separate closed forms),
so their interrelations hold to round-off and the alpha modulus identity

    |alpha|^2 = m e^{-4 pi m omega} / (pi Omega sinh(4 pi m omega))

independently validates alpha itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.special import loggamma

from .state import squeezing_parameter


@dataclass(frozen=True)
class CollapseGeometry:
    """Mass and horizon null coordinate v_h = v0 - 4m (geometric units)."""

    m: float
    v_h: float = 0.0

    def __post_init__(self) -> None:
        if not (self.m > 0 and math.isfinite(self.m)):
            raise ValueError(f"mass must be positive and finite, got {self.m}")
        if not math.isfinite(self.v_h):
            raise ValueError(f"v_h must be finite, got {self.v_h}")


def complex_log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma; raises at the poles."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        raise ValueError(f"log Gamma pole at z={z}")
    return complex(loggamma(z))


def _check_frequencies(omega: float, capital_omega: float) -> None:
    if not (omega > 0 and math.isfinite(omega)):
        raise ValueError(f"omega must be positive and finite, got {omega}")
    if not (capital_omega > 0 and math.isfinite(capital_omega)):
        raise ValueError(f"capital_omega must be positive and finite, got {capital_omega}")


def alpha(omega: float, capital_omega: float, geom: CollapseGeometry) -> complex:
    """Overlap of a past monochromatic mode with an outgoing future mode."""
    _check_frequencies(omega, capital_omega)
    m = geom.m
    a = 4.0 * m * omega
    exponent = (
        -1j * a * math.log(4.0 * m)
        - 1j * (omega - capital_omega) * geom.v_h
        + (-1.0 - 1j * a) * (math.log(capital_omega) - 1j * math.pi / 2.0)
        + complex_log_gamma(1.0 + 1j * a)
    )
    prefactor = -math.sqrt(capital_omega / omega) / (2.0 * math.pi)
    return prefactor * cmath.exp(exponent)


def beta_gamma_delta(
    omega: float, capital_omega: float, geom: CollapseGeometry
) -> tuple[complex, complex, complex]:
    """(beta, gamma, delta), each derived from the already-evaluated alpha.

    beta  = -tanh(r_omega) e^{-2 i Omega v_h} alpha
    gamma =                e^{-2 i Omega v_h} alpha
    delta = -tanh(r_omega) conj(alpha)
    """
    a = alpha(omega, capital_omega, geom)
    tanh_r = math.exp(-4.0 * math.pi * geom.m * omega)
    phase = cmath.exp(-2j * capital_omega * geom.v_h)
    return -tanh_r * phase * a, phase * a, -tanh_r * a.conjugate()


def alpha_modulus_sq_closed_form(omega: float, capital_omega: float, m: float) -> float:
    """|alpha|^2 = m e^{-4 pi m omega} / (pi Omega sinh(4 pi m omega))."""
    x = 4.0 * math.pi * m * omega
    return m * math.exp(-x) / (math.pi * capital_omega * math.sinh(x))


def rl_mode_coefficient(
    omega: float, capital_omega: float, geom: CollapseGeometry, side: str
) -> complex:
    """Composition coefficient of the diagonal-transforming past modes.

    R side: cosh(r_Omega) alpha + sinh(r_Omega) delta
    L side: cosh(r_Omega) gamma + sinh(r_Omega) beta

    with r_Omega the squeezing angle at the future frequency.  The returned
    value is the bracketed coefficient; the mode expansion itself carries its
    complex conjugate.
    """
    if side not in ("R", "L"):
        raise ValueError(f"side must be 'R' or 'L', got {side!r}")
    s = squeezing_parameter(geom.m * capital_omega)
    sinh_r = s.tanh_r * s.cosh_r
    a = alpha(omega, capital_omega, geom)
    b, g, d = beta_gamma_delta(omega, capital_omega, geom)
    if side == "R":
        return s.cosh_r * a + sinh_r * d
    return s.cosh_r * g + sinh_r * b
