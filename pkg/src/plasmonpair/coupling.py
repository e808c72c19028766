"""Atom-plasmon coupling strength and inter-atom interaction function.

The surface mode couples each atom with strength Omega0 set by the atom
height z0; the two-atom cross coupling is Omega0^2 * U(x21, z0), where U is
a five-term combination of Gauss hypergeometric functions of -x21^2/(2 z0)^2.
Symmetric/antisymmetric superpositions of the atoms then couple with
Omega_s = Omega0 sqrt(1+U) and Omega_a = Omega0 sqrt(1-U).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DivergenceError, DomainError, ValidationError
from .specfun import hyp2f1


@dataclass(frozen=True)
class Geometry:
    """Atom placement relative to the interface, in units of the plasma
    wavelength ``lambda_s`` (which may carry an absolute scale)."""

    x21: float          # lateral atom-atom separation
    z0: float           # atom height above the interface
    lambda_s: float = 1.0

    def __post_init__(self):
        if self.z0 <= 0:
            raise ValidationError("geometry requires z0 > 0")
        if self.x21 < 0:
            raise ValidationError("geometry requires x21 >= 0")
        if self.lambda_s <= 0:
            raise ValidationError("geometry requires lambda_s > 0")


@dataclass(frozen=True)
class CouplingParams:
    """Dimensionless dynamical parameters, all rates in units of ``gamma``."""

    omega0: float       # single-atom coupling Omega0
    u_factor: float     # interaction function U in [0, 1]
    delta: float = 0.0  # detuning omega_s - omega_a of mode vs atom
    gamma: float = 1.0  # plasma mode linewidth (the rate unit)
    gamma_a: float = 1.0  # free-space atomic decay (physical mode only)

    def __post_init__(self):
        if self.omega0 < 0:
            raise ValidationError("omega0 must be >= 0")
        if not 0.0 <= self.u_factor <= 1.0:
            raise ValidationError("u_factor must lie in [0, 1]")
        # gamma = 0 is admitted for the lossless limit; it still fixes the
        # nominal rate unit in that case.
        if self.gamma < 0:
            raise ValidationError("gamma must be >= 0")


@dataclass(frozen=True)
class CollectiveCouplings:
    """Couplings of the symmetric and antisymmetric two-atom states."""

    omega_s: float
    omega_a: float


def coupling_strength(geom: Geometry, mu1_real_abs: float = 2.0,
                      gamma_a: float = 1.0, omega_s: float = 1.0e4) -> float:
    """Single-atom coupling strength to the surface mode,

        Omega0 = sqrt( omega_s * Gamma_A * B / (64 pi^3 zt^3) ),
        B = 3 + 4 pi^2 * |Re mu1| * zt^2,  zt = 2 z0 / lambda_s.

    Diverges as z0 -> 0 (the mode density blows up at the interface).
    ``gamma_a`` and ``omega_s`` are in the caller's rate unit.
    """
    if geom.z0 <= 0:
        raise DivergenceError("coupling strength diverges as z0 -> 0")
    zt = 2.0 * geom.z0 / geom.lambda_s
    bracket = 3.0 + 4.0 * math.pi ** 2 * mu1_real_abs * zt * zt
    return math.sqrt(omega_s * gamma_a * bracket / (64.0 * math.pi ** 3 * zt ** 3))


def interaction_function(geom: Geometry, mu1_real_abs: float = 2.0) -> float:
    """Normalized two-atom cross coupling U(x21, z0) in [0, 1].

    U = F(1/2,1;2;z) + (1/B) * [ F(3/2,2;2;z) + 2 F(3/2,2;1;z)
            - 3 F(1/2,1;2;z) - 3 xt^2 F(5/2,3;3;z) ]

    with xt = x21/(2 z0), z = -xt^2, and B the bracket of the coupling
    strength.  U(0, z0) = 1 exactly.  The raw value is clamped to [0, 1];
    escapes beyond 1e-8 trigger a warning rather than silent truncation.
    """
    if geom.z0 <= 0:
        raise DomainError("interaction_function requires z0 > 0")
    if geom.x21 < 0:
        raise DomainError("interaction_function requires x21 >= 0")
    zt = 2.0 * geom.z0 / geom.lambda_s
    xt = geom.x21 / (2.0 * geom.z0)
    z = -xt * xt
    bracket = 3.0 + 4.0 * math.pi ** 2 * mu1_real_abs * zt * zt
    f_half = hyp2f1(0.5, 1.0, 2.0, z).real
    value = f_half + (
        hyp2f1(1.5, 2.0, 2.0, z).real
        + 2.0 * hyp2f1(1.5, 2.0, 1.0, z).real
        - 3.0 * f_half
        - 3.0 * xt * xt * hyp2f1(2.5, 3.0, 3.0, z).real
    ) / bracket
    if value < -1e-8 or value > 1.0 + 1e-8:
        warnings.warn(
            "interaction function escaped [0, 1] by %.3e at x21=%g, z0=%g; "
            "clamping" % (max(-value, value - 1.0), geom.x21, geom.z0),
            RuntimeWarning,
        )
    return min(1.0, max(0.0, value))


def collective_couplings(params: CouplingParams) -> CollectiveCouplings:
    """Omega_s = Omega0 sqrt(1+U), Omega_a = Omega0 sqrt(1-U); the sum of
    squares is 2 Omega0^2 exactly."""
    return CollectiveCouplings(
        omega_s=params.omega0 * math.sqrt(1.0 + params.u_factor),
        omega_a=params.omega0 * math.sqrt(1.0 - params.u_factor),
    )


def field_distribution(geom_source: Geometry, x: float,
                       params: CouplingParams) -> float:
    """Scaled interface field produced at lateral position ``x`` by an atom
    whose lateral coordinate is ``geom_source.x21`` and height is
    ``geom_source.z0``: Omega0^2 * U(|x - x_i|, z_i), with the dimensional
    prefactor absorbed into the unit choice."""
    if geom_source.z0 <= 0:
        raise DomainError("field_distribution requires source z0 > 0")
    probe = Geometry(x21=abs(x - geom_source.x21), z0=geom_source.z0,
                     lambda_s=geom_source.lambda_s)
    return params.omega0 ** 2 * interaction_function(probe)
