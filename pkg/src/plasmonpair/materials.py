"""Dispersive material models for the paired slabs.

One slab is magnetically negative (static permittivity ``eps_static``,
dispersive permeability mu1), the other electrically negative (dispersive
permittivity eps2, static permeability ``mu_static``).  The module provides
the Drude-Lorentz dispersion, effective-medium averages, the interface-mode
resonance frequency, and Fresnel reflection coefficients in both their exact
interface form and the near-resonance Lorentzian form used by the
closed-form Green-function expressions.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    DomainError,
    SingularityError,
    UnsupportedConfigError,
    ValidationError,
)


@dataclass(frozen=True)
class SlabModel:
    """Material and geometric parameters of the paired slabs.

    Frequencies are unit-agnostic: every operation treats them in whatever
    unit ``omega_ep`` is expressed in.
    """

    eps_static: float = 2.0   # static permittivity of the mu-negative slab
    mu_static: float = 2.0    # static permeability of the eps-negative slab
    omega_ep: float = 1.0     # electric plasma frequency
    omega_mp: float = 1.0     # magnetic plasma frequency
    omega_eo: float = 0.0     # electric resonance frequency
    omega_mo: float = 0.0     # magnetic resonance frequency
    gamma_e: float = 1e-4     # electric damping rate
    gamma_m: float = 1e-4     # magnetic damping rate
    d1: float = 1.0           # thickness of the mu-negative slab
    d2: float = 1.0           # thickness of the eps-negative slab

    def __post_init__(self):
        if self.eps_static <= -1 or self.mu_static <= -1:
            raise ValidationError("static permittivity/permeability must be > -1")
        if self.gamma_e <= 0 or self.gamma_m <= 0:
            raise ValidationError("damping rates must be > 0")
        if not (self.omega_ep > self.omega_eo >= 0):
            raise ValidationError("requires omega_ep > omega_eo >= 0")
        if not (self.omega_mp > self.omega_mo >= 0):
            raise ValidationError("requires omega_mp > omega_mo >= 0")


def default_model(omega_s: float = 1.0e4) -> SlabModel:
    """Reference configuration: matched slabs with eps = mu = 2 statics,
    equal plasma frequencies, damping gamma = 1e-4 * omega_s, equal
    thicknesses.  ``omega_s`` fixes the frequency unit (the interface-mode
    resonance lands exactly there).
    """
    omega_ep = omega_s * math.sqrt(3.0)
    return SlabModel(
        eps_static=2.0,
        mu_static=2.0,
        omega_ep=omega_ep,
        omega_mp=omega_ep,
        gamma_e=1e-4 * omega_s,
        gamma_m=1e-4 * omega_s,
    )


@dataclass(frozen=True)
class ComplexPermittivityPair:
    """Dispersive response at one frequency: eps of the eps-negative slab
    and mu of the mu-negative slab."""

    eps2: complex
    mu1: complex


def dispersion(model: SlabModel, omega: float) -> ComplexPermittivityPair:
    """Drude-Lorentz response of both slabs at ``omega`` (> 0)."""
    if omega <= 0:
        raise DomainError("dispersion requires omega > 0")
    eps2 = 1.0 + model.omega_ep ** 2 / (
        model.omega_eo ** 2 - omega * omega - 1j * omega * model.gamma_e
    )
    mu1 = 1.0 + model.omega_mp ** 2 / (
        model.omega_mo ** 2 - omega * omega - 1j * omega * model.gamma_m
    )
    return ComplexPermittivityPair(eps2=eps2, mu1=mu1)


def effective_medium(model: SlabModel, omega: float) -> tuple[complex, complex]:
    """Thickness-weighted averages (eps_r, mu_r) of the slab pair."""
    if model.d1 < 0 or model.d2 < 0 or model.d1 + model.d2 <= 0:
        raise ValidationError("slab thicknesses must be >= 0 with d1 + d2 > 0")
    disp = dispersion(model, omega)
    dsum = model.d1 + model.d2
    eps_r = (model.d1 * model.eps_static + model.d2 * disp.eps2) / dsum
    mu_r = (model.d1 * disp.mu1 + model.d2 * model.mu_static) / dsum
    return eps_r, mu_r


def plasma_frequency(model: SlabModel) -> float:
    """Interface-mode resonance frequency omega_ep / sqrt(1 + eps1)."""
    if model.eps_static <= -1:
        raise DomainError("plasma_frequency requires eps_static > -1")
    return model.omega_ep / math.sqrt(1.0 + model.eps_static)


def beta_z(eps: complex, mu: complex, omega: float, k_par: float,
           c: float = 1.0) -> complex:
    """Normal wavevector component sqrt(eps*mu*(omega/c)^2 - k_par^2),
    on the branch Im >= 0 so evanescent waves decay away from the interface.
    """
    w = cmath.sqrt(eps * mu * (omega / c) ** 2 - k_par * k_par)
    if w.imag < 0 or (w.imag == 0 and w.real < 0):
        w = -w
    return w


def reflection_interface(eps_i: complex, eps_j: complex, mu_i: complex,
                         mu_j: complex, beta_i: complex, beta_j: complex,
                         polarization: str) -> complex:
    """Single-interface Fresnel coefficient for incidence from medium i.

    p: (beta_i eps_j - beta_j eps_i) / (beta_i eps_j + beta_j eps_i)
    s: (beta_i mu_j  - beta_j mu_i)  / (beta_i mu_j  + beta_j mu_i)
    """
    if polarization == "p":
        num = beta_i * eps_j - beta_j * eps_i
        den = beta_i * eps_j + beta_j * eps_i
    elif polarization == "s":
        num = beta_i * mu_j - beta_j * mu_i
        den = beta_i * mu_j + beta_j * mu_i
    else:
        raise ValidationError("polarization must be 'p' or 's'")
    if den == 0:
        raise SingularityError(
            "reflection coefficient pole (surface-mode resonance)")
    return num / den


def reflection_resonant(model: SlabModel, omega: float,
                        polarization: str) -> complex:
    """Lorentzian near-resonance form of the inter-slab quasi-static
    reflection coefficient, valid for |omega - omega_s| << omega_s.

    p: 1 - eps1 * omega_s (dw - i gamma/2) / ((eps1+1)(dw^2 + gamma^2/4))
    s: -1 + mu2 * omega_s (dw - i gamma/2) / ((mu2+1)(dw^2 + gamma^2/4))

    with dw = omega - omega_s.  Both static parameters enter with their
    positive values; for the matched pair they equal the magnitude of the
    negative dispersive response at resonance.
    """
    if model.gamma_e != model.gamma_m:
        raise UnsupportedConfigError(
            "resonant reflection form assumes gamma_e == gamma_m")
    gamma = model.gamma_e
    omega_s = plasma_frequency(model)
    dw = omega - omega_s
    lorentz = dw * dw + gamma * gamma / 4.0
    if polarization == "p":
        e1 = model.eps_static
        return 1.0 - e1 * omega_s * (dw - 0.5j * gamma) / ((e1 + 1.0) * lorentz)
    if polarization == "s":
        m2 = model.mu_static
        return -1.0 + m2 * omega_s * (dw - 0.5j * gamma) / ((m2 + 1.0) * lorentz)
    raise ValidationError("polarization must be 'p' or 's'")


def reflection_quasistatic(model: SlabModel, omega: float,
                           polarization: str) -> complex:
    """Exact quasi-static (large k_par) inter-slab coefficient built from
    the full dispersion: p -> (eps2 - eps1)/(eps2 + eps1),
    s -> (mu2 - mu1)/(mu2 + mu1), incidence from the mu-negative slab.
    """
    disp = dispersion(model, omega)
    if polarization == "p":
        num = disp.eps2 - model.eps_static
        den = disp.eps2 + model.eps_static
    elif polarization == "s":
        num = model.mu_static - disp.mu1
        den = model.mu_static + disp.mu1
    else:
        raise ValidationError("polarization must be 'p' or 's'")
    if den == 0:
        raise SingularityError(
            "reflection coefficient pole (surface-mode resonance)")
    return num / den


def reflection_layered(model: SlabModel, omega: float, k_par: float,
                       polarization: str, c: float = 1.0) -> complex:
    """Three-layer coefficient for the finite eps-negative slab backed by
    vacuum: r = (r12 + r23 e^{2 i beta2 d2}) / (1 + r12 r23 e^{2 i beta2 d2}).

    In the evanescent regime |e^{2 i beta2 d2}| << 1 this reduces to the
    single-interface value; the package integrates only that limit and
    exposes this form for checking when the reduction is justified.
    """
    disp = dispersion(model, omega)
    eps1, mu2 = complex(model.eps_static), complex(model.mu_static)
    eps2, mu1 = disp.eps2, disp.mu1
    b1 = beta_z(eps1, mu1, omega, k_par, c)
    b2 = beta_z(eps2, mu2, omega, k_par, c)
    b3 = beta_z(1.0, 1.0, omega, k_par, c)
    r12 = reflection_interface(eps1, eps2, mu1, mu2, b1, b2, polarization)
    r23 = reflection_interface(eps2, 1.0, mu2, 1.0, b2, b3, polarization)
    phase = cmath.exp(2j * b2 * model.d2)
    den = 1.0 + r12 * r23 * phase
    if den == 0:
        raise SingularityError("layered reflection pole")
    return (r12 + r23 * phase) / den
