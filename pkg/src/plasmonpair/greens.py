"""Imaginary parts of the layered-medium Green tensor near the surface-mode
resonance, three ways:

* closed-form Lorentzian expressions (functions of the atom geometry and
  the detuning from the mode resonance),
* a quasi-static k-space quadrature built from Bessel weights and the
  resonant reflection coefficients (independent of the hypergeometric
  closed forms — validates them),
* the memory-kernel frequency integral over the resonance window, whose
  analytic value is -Omega0^2 U e^{-(gamma/2 + i delta) tau}.

Unit convention: lengths in units of geom.lambda_s, so the mode wavenumber
is ks = 2 pi / lambda_s and k(omega) = 2 pi omega / (omega_s lambda_s);
frequencies/rates in whatever unit ``omega_s`` and ``gamma`` share (the
package default is gamma = 1, omega_s = 1e4).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coupling import Geometry
from .errors import DomainError, NumericalError, ValidationError
from .materials import (
    SlabModel,
    dispersion,
    plasma_frequency,
    reflection_resonant,
)
from .specfun import bessel_j, hyp2f1

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


@dataclass(frozen=True)
class GreenDiagonal:
    """Imaginary diagonal Green components at one frequency."""

    im_gxx: float
    im_gzz: float
    omega: float
    one_point: bool


@dataclass(frozen=True)
class QuadratureSpec:
    """Discretization request for the k-space integral.  ``k_max`` defaults
    to 30/(2 z0), which puts the evanescent factor below 1e-12; ``kappa``
    selects the transverse decay model ('quasistatic': kappa = k_par;
    'full': kappa = sqrt(k_par^2 + |k1|^2))."""

    k_max: Optional[float] = None
    rel_tol: float = 1e-6
    max_evals: int = 200000
    kappa: str = "quasistatic"

    def __post_init__(self):
        if self.k_max is not None and self.k_max <= 0:
            raise ValidationError("k_max must be > 0")
        if self.rel_tol <= 0:
            raise ValidationError("rel_tol must be > 0")
        if self.max_evals < 1280:
            raise ValidationError("max_evals too small for the seed grid")
        if self.kappa not in ("quasistatic", "full"):
            raise ValidationError("kappa must be 'quasistatic' or 'full'")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    kappa: str


@dataclass(frozen=True)
class KernelSample:
    """Memory-kernel value at one delay, with the flat-frequency variant
    (omega^2 frozen at omega_s^2) and the estimated out-of-window tail."""

    value: complex
    flat_value: complex
    tail_fraction: float


def _kpar_cubed_lorentz(geom: Geometry, omega: float, gamma: float,
                        omega_s: float) -> float:
    """Shared prefactor gamma*omega_s / (12 pi k^2 L (2 z0)^3)."""
    if geom.z0 <= 0:
        raise DomainError("Green functions require z0 > 0")
    if omega <= 0:
        raise DomainError("Green functions require omega > 0")
    k = 2.0 * math.pi * omega / (omega_s * geom.lambda_s)
    dw = omega - omega_s
    lorentz = dw * dw + 0.25 * gamma * gamma
    two_z0 = 2.0 * geom.z0 * geom.lambda_s
    return gamma * omega_s / (12.0 * math.pi * k * k * lorentz * two_z0 ** 3)


def green_zz_closed(geom: Geometry, omega: float, gamma: float,
                    omega_s: float, two_point: bool = False) -> float:
    """Im G_zz: Lorentzian in (omega - omega_s) times 1/(2 z0)^3, with the
    two-point lateral factor 2F1(3/2, 2; 1; -(x21/2z0)^2)."""
    pref = _kpar_cubed_lorentz(geom, omega, gamma, omega_s)
    if not two_point:
        return pref
    xt = geom.x21 / (2.0 * geom.z0)
    return pref * hyp2f1(1.5, 2.0, 1.0, -xt * xt).real


def green_xx_closed(geom: Geometry, omega: float, gamma: float,
                    omega_s: float, mu1_real: float = -2.0,
                    two_point: bool = False) -> float:
    """Im G_xx with the signed permeability term (mu1_real < 0 on the
    single-negative band adds to the density of states):

      [F(3/2,2;2;z) - 3 xt^2 F(5/2,3;3;z) - mu1_real (ks 2z0)^2 F(1/2,1;2;z)]
      x gamma omega_s / (24 pi k^2 L (2 z0)^3),  z = -xt^2.
    """
    pref = 0.5 * _kpar_cubed_lorentz(geom, omega, gamma, omega_s)
    ks_two_z0 = 2.0 * math.pi * (2.0 * geom.z0)
    if not two_point:
        return pref * (1.0 - mu1_real * ks_two_z0 ** 2)
    xt = geom.x21 / (2.0 * geom.z0)
    z = -xt * xt
    bracket = (hyp2f1(1.5, 2.0, 2.0, z).real
               - 3.0 * xt * xt * hyp2f1(2.5, 3.0, 3.0, z).real
               - mu1_real * ks_two_z0 ** 2 * hyp2f1(0.5, 1.0, 2.0, z).real)
    return pref * bracket


def green_diagonal_closed(geom: Geometry, omega: float, gamma: float,
                          omega_s: float, mu1_real: float = -2.0,
                          two_point: bool = False) -> GreenDiagonal:
    return GreenDiagonal(
        im_gxx=green_xx_closed(geom, omega, gamma, omega_s, mu1_real,
                               two_point),
        im_gzz=green_zz_closed(geom, omega, gamma, omega_s, two_point),
        omega=omega,
        one_point=not two_point,
    )


def _j1_over_x(x: float) -> float:
    if abs(x) < 1e-8:
        return 0.5 - x * x / 16.0
    return bessel_j(1, x) / x


def _quad_integrand(component: str, k_par: np.ndarray, geom: Geometry,
                    model: SlabModel, omega: float, kappa_mode: str,
                    im_rp: float, im_rs: float, k: float,
                    k1_abs_sq: float) -> np.ndarray:
    z0 = geom.z0 * geom.lambda_s
    x21 = geom.x21 * geom.lambda_s
    if kappa_mode == "full":
        kappa = np.sqrt(k_par * k_par + k1_abs_sq)
    else:
        kappa = k_par
    damp = np.exp(-2.0 * z0 * kappa)
    eps1 = model.eps_static
    out = np.empty_like(k_par)
    for i, kp in enumerate(k_par):
        alpha = kp * x21
        if component == "zz":
            geom_w = kp * kp * bessel_j(0, alpha)
            out[i] = geom_w * damp[i] * im_rp / (4.0 * math.pi * eps1 * k * k)
        else:
            p_part = (kp * kp * (_j1_over_x(alpha) - bessel_j(2, alpha))
                      * im_rp / (4.0 * math.pi * eps1 * k * k))
            s_part = (-model.mu_static / (4.0 * math.pi)
                      * _j1_over_x(alpha) * im_rs)
            out[i] = (p_part + s_part) * damp[i]
    return out


def green_quadrature(geom: Geometry, model: SlabModel, omega: float,
                     component: str, spec: QuadratureSpec = QuadratureSpec()
                     ) -> QuadratureResult:
    """Quasi-static k-space evaluation of Im G_xx or Im G_zz by composite
    10-point Gauss-Legendre panels with successive panel doubling until the
    doubling correction drops below ``rel_tol``."""
    if component not in ("xx", "zz"):
        raise ValidationError("component must be 'xx' or 'zz'")
    if geom.z0 <= 0:
        raise DomainError("green_quadrature requires z0 > 0")
    omega_s = plasma_frequency(model)
    gamma = model.gamma_e
    z0 = geom.z0 * geom.lambda_s
    k_max = spec.k_max if spec.k_max is not None else 30.0 / (2.0 * z0)
    if math.exp(-2.0 * z0 * k_max) > 1e-12:
        warnings.warn(
            "k_max leaves evanescent tail above 1e-12; result may be "
            "truncated", RuntimeWarning)
    k = 2.0 * math.pi * omega / (omega_s * geom.lambda_s)
    im_rp = reflection_resonant(model, omega, "p").imag
    im_rs = reflection_resonant(model, omega, "s").imag
    k1_abs_sq = abs(model.eps_static * dispersion(model, omega).mu1) * k * k

    def composite(n_panels: int) -> float:
        edges = np.linspace(0.0, k_max, n_panels + 1)
        total = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            mid = 0.5 * (a + b)
            half = 0.5 * (b - a)
            nodes = mid + half * _GL_NODES
            vals = _quad_integrand(component, nodes, geom, model, omega,
                                   spec.kappa, im_rp, im_rs, k, k1_abs_sq)
            total += half * float(np.dot(_GL_WEIGHTS, vals))
        return total

    panels = 64
    evals = 0
    prev = None
    while True:
        value = composite(panels)
        evals += panels * 10
        if prev is not None:
            err = abs(value - prev) / max(abs(value), 1e-300)
            if err <= spec.rel_tol:
                return QuadratureResult(value=value, error_estimate=err,
                                        evaluations=evals, kappa=spec.kappa)
        if evals + 2 * panels * 10 > spec.max_evals:
            err = (abs(value - prev) / max(abs(value), 1e-300)
                   if prev is not None else math.inf)
            exc = NumericalError(
                "quadrature budget exhausted at %d evaluations "
                "(relative change %.3e > rel_tol %.3e)"
                % (evals, err, spec.rel_tol))
            exc.achieved = err
            exc.partial = value
            raise exc
        prev = value
        panels *= 2


def kernel_from_greens(geom: Geometry, gamma: float, omega_s: float,
                       omega_a: float, tau: float,
                       variant: str = "exact",
                       window_halfwidth: Optional[float] = None,
                       mu1_real: float = -2.0,
                       gamma_a: float = 1.0) -> KernelSample:
    """Memory kernel K(tau) from the frequency integral of the Green
    density over the window omega_s +- 50 gamma:

        K(tau) = -(3 Gamma_A c / (2 omega_a^3))
                 * Integral domega omega^2 [Im G_xx + Im G_zz](omega)
                   e^{-i (omega - omega_a) tau}

    whose analytic value is -Omega0^2 U(x21, z0) e^{-(gamma/2 + i delta) tau}
    with delta = omega_s - omega_a.  Both the exact-omega^2 integral and the
    flat (omega^2 -> omega_s^2) variant are computed; ``variant`` selects
    which one lands in ``value``.  A tail estimate above 1% of the in-window
    mass raises an accuracy warning.
    """
    if tau < 0:
        raise DomainError("kernel delay tau must be >= 0")
    if variant not in ("exact", "flat"):
        raise ValidationError("variant must be 'exact' or 'flat'")
    halfwidth = 50.0 * gamma if window_halfwidth is None else window_halfwidth
    if halfwidth <= 0:
        raise ValidationError("window_halfwidth must be > 0")
    tail = 1.0 - (2.0 / math.pi) * math.atan(2.0 * halfwidth / gamma)
    if tail > 0.01:
        warnings.warn(
            "kernel window omega_s +- %.3g leaves a Lorentzian tail of "
            "%.2f%% outside" % (halfwidth, 100.0 * tail), RuntimeWarning)
    c_light = omega_s * geom.lambda_s / (2.0 * math.pi)
    # The lateral (hypergeometric) structure is frequency-independent; hoist
    # it so only the Lorentzian and phase vary across the window.
    xt = geom.x21 / (2.0 * geom.z0)
    z = -xt * xt
    ks_two_z0 = 2.0 * math.pi * (2.0 * geom.z0)
    bracket_zz = 2.0 * hyp2f1(1.5, 2.0, 1.0, z).real
    bracket_xx = (hyp2f1(1.5, 2.0, 2.0, z).real
                  - 3.0 * xt * xt * hyp2f1(2.5, 3.0, 3.0, z).real
                  - mu1_real * ks_two_z0 ** 2 * hyp2f1(0.5, 1.0, 2.0, z).real)
    two_z0 = 2.0 * geom.z0 * geom.lambda_s
    geom_factor = gamma * omega_s * (bracket_zz + bracket_xx) / (
        24.0 * math.pi * two_z0 ** 3)
    panels = max(64, int(math.ceil(2.0 * halfwidth / (0.25 * gamma))))
    edges = np.linspace(omega_s - halfwidth, omega_s + halfwidth, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * (edges[1:] - edges[:-1])
    omegas = (mids[:, None] + halves[:, None] * _GL_NODES[None, :]).ravel()
    weights = (halves[:, None] * _GL_WEIGHTS[None, :]).ravel()
    k_sq = (2.0 * math.pi * omegas / (omega_s * geom.lambda_s)) ** 2
    lorentz = (omegas - omega_s) ** 2 + 0.25 * gamma * gamma
    dens = geom_factor / (k_sq * lorentz)
    phase = np.exp(-1j * (omegas - omega_a) * tau)
    pref = -1.5 * gamma_a * c_light / omega_a ** 3
    exact_val = pref * complex(np.sum(weights * omegas ** 2 * dens * phase))
    flat_val = pref * omega_s ** 2 * complex(np.sum(weights * dens * phase))
    return KernelSample(
        value=exact_val if variant == "exact" else flat_val,
        flat_value=flat_val,
        tail_fraction=tail,
    )
