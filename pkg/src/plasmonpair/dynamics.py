"""Closed-form single-excitation dynamics of two atoms sharing a lossy
surface mode.

Each collective mode (symmetric/antisymmetric, coupling Omega) obeys a
damped two-level exchange with the complex rate lam_d = gamma/2 + i*delta:

    C(t) = c0 e^{-q t} [cosh(Wt) + q t sinhc(Wt)],   q = lam_d / 2,
    B(t) = i Omega c0 t e^{-q t} sinhc(Wt),
    W    = sqrt(q^2 - Omega^2)  (principal branch).

Below threshold (W real) the motion is biexponential with rates
gamma/4 -+ Re W; above threshold (W imaginary at delta = 0) it oscillates at
the effective Rabi frequency |W|.  Atomic amplitudes are recovered from the
two modes by the +-1/sqrt(2) combinations.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .coupling import CouplingParams, collective_couplings
from .errors import DomainError, UnsupportedConfigError, ValidationError
from .series import AmplitudeState, TimeSeries
from .specfun import complex_sqrt_principal, sinhc

_SQRT2 = math.sqrt(2.0)
# Switch to the explicit two-exponential form once cosh/sinh would mix
# magnitudes beyond float range; validated branch-consistent to 5e-16.
_BIG_ARG = 350.0
# Treat the effective Rabi frequency as vanishing (degenerate limit) below
# this fraction of gamma: the 1/W forms lose all digits there.
_CRITICAL_EVAL = 1e-9
# Regime labeling threshold (relative to u = sqrt(gamma^2 + 4 delta^2)).
_CRITICAL_LABEL = 1e-12


@dataclass(frozen=True)
class ModeSolution:
    """Laplace-domain solution data of one collective mode."""

    mode: str               # "symmetric" or "antisymmetric"
    omega_mode: float       # coupling Omega of this mode (units of gamma)
    gamma: float
    delta: float
    rabi_eff: complex       # W = sqrt((gamma + 2i delta)^2/16 - Omega^2)
    rate_slow: float        # gamma/4 - Re W
    rate_fast: float        # gamma/2 - rate_slow (sum exact)
    regime: str             # "below", "critical", "above"

    @property
    def lam_d(self) -> complex:
        return 0.5 * self.gamma + 1j * self.delta

    @property
    def q(self) -> complex:
        return 0.25 * self.gamma + 0.5j * self.delta

    @property
    def mu_slow(self) -> complex:
        return -self.q + self.rabi_eff

    @property
    def mu_fast(self) -> complex:
        return -self.q - self.rabi_eff

    @property
    def is_critical(self) -> bool:
        return abs(self.rabi_eff) < _CRITICAL_EVAL * self.gamma


def mode_solution(omega_mode: float, gamma: float, delta: float = 0.0,
                  mode: str = "symmetric") -> ModeSolution:
    """Solve one collective mode's characteristic data."""
    if gamma < 0:
        raise ValidationError("mode_solution requires gamma >= 0")
    if omega_mode < 0:
        raise ValidationError("mode_solution requires omega_mode >= 0")
    if mode not in ("symmetric", "antisymmetric"):
        raise ValidationError("mode must be 'symmetric' or 'antisymmetric'")
    q = 0.25 * gamma + 0.5j * delta
    rabi = complex_sqrt_principal(q * q - omega_mode * omega_mode)
    rate_slow = 0.25 * gamma - rabi.real
    rate_fast = 0.5 * gamma - rate_slow
    u = math.hypot(gamma, 2.0 * delta)
    if u == 0.0:
        regime = "above" if omega_mode > 0 else "critical"
    elif abs(omega_mode - 0.25 * u) < _CRITICAL_LABEL * u:
        regime = "critical"
    elif omega_mode < 0.25 * u:
        regime = "below"
    else:
        regime = "above"
    return ModeSolution(mode=mode, omega_mode=omega_mode, gamma=gamma,
                        delta=delta, rabi_eff=rabi, rate_slow=rate_slow,
                        rate_fast=rate_fast, regime=regime)


def _mode_cb(t: float, sol: ModeSolution, c0: complex) -> Tuple[complex, complex]:
    """Atom amplitude C(t) and image amplitude B(t) of one mode."""
    if t < 0:
        raise DomainError("mode amplitudes require t >= 0")
    q = sol.q
    omega = sol.omega_mode
    if sol.is_critical:
        decay = cmath.exp(-q * t)
        return c0 * decay * (1.0 + q * t), 1j * omega * c0 * t * decay
    w = sol.rabi_eff
    wt = w * t
    if abs(wt) >= _BIG_ARG:
        a_plus = 0.5 * (1.0 + q / w)
        a_minus = 0.5 * (1.0 - q / w)
        e_plus = cmath.exp(sol.mu_slow * t)
        e_minus = cmath.exp(sol.mu_fast * t)
        c_val = c0 * (a_plus * e_plus + a_minus * e_minus)
        b_val = 1j * omega * c0 * (e_plus - e_minus) / (2.0 * w)
        return c_val, b_val
    decay = cmath.exp(-q * t)
    sh = sinhc(wt)
    c_val = c0 * decay * (cmath.cosh(wt) + q * t * sh)
    b_val = 1j * omega * c0 * t * decay * sh
    return c_val, b_val


def amplitude_mode(t: float, mode_sol: ModeSolution, c0: complex) -> complex:
    """Collective-mode atomic amplitude C(t) from initial value ``c0`` with
    the image amplitude starting at zero."""
    return _mode_cb(t, mode_sol, c0)[0]


def mode_pair(t: float, mode_sol: ModeSolution,
              c0: complex) -> Tuple[complex, complex]:
    """(C(t), B(t)) of one collective mode."""
    return _mode_cb(t, mode_sol, c0)


def _check_initial(initial: AmplitudeState) -> None:
    if initial.t != 0.0:
        raise ValidationError("evolution starts from t = 0")
    if initial.b1 != 0 or initial.b2 != 0:
        raise ValidationError("initial image amplitudes must be zero")
    norm = abs(initial.c1) ** 2 + abs(initial.c2) ** 2
    if norm > 1.0 + 1e-9:
        raise ValidationError(
            "initial state norm %.12g exceeds 1" % norm)


def _mode_solutions(params: CouplingParams) -> Tuple[ModeSolution, ModeSolution]:
    coup = collective_couplings(params)
    sol_s = mode_solution(coup.omega_s, params.gamma, params.delta, "symmetric")
    sol_a = mode_solution(coup.omega_a, params.gamma, params.delta,
                          "antisymmetric")
    return sol_s, sol_a


def evolve(t_grid: Union[Sequence[float], np.ndarray], params: CouplingParams,
           initial: AmplitudeState) -> TimeSeries:
    """Analytic atomic amplitudes on ``t_grid`` for a normalized initial
    state with zero image amplitudes."""
    _check_initial(initial)
    sol_s, sol_a = _mode_solutions(params)
    cs0, ca0 = initial.cs, initial.ca
    t = np.asarray(t_grid, dtype=float)
    c1 = np.empty(t.shape, dtype=complex)
    c2 = np.empty(t.shape, dtype=complex)
    for i, ti in enumerate(t):
        cs = amplitude_mode(float(ti), sol_s, cs0)
        ca = amplitude_mode(float(ti), sol_a, ca0)
        c1[i] = (cs + ca) / _SQRT2
        c2[i] = (cs - ca) / _SQRT2
    return TimeSeries(t=t, c1=c1, c2=c2, source="analytic", params=params)


def image_amplitudes(t_grid: Union[Sequence[float], np.ndarray],
                     params: CouplingParams,
                     initial: AmplitudeState) -> TimeSeries:
    """As :func:`evolve`, additionally returning the untilded image
    amplitudes b1, b2 (stored damped: b_j = tilde-image * e^{-lam_d t})."""
    _check_initial(initial)
    sol_s, sol_a = _mode_solutions(params)
    cs0, ca0 = initial.cs, initial.ca
    t = np.asarray(t_grid, dtype=float)
    c1 = np.empty(t.shape, dtype=complex)
    c2 = np.empty(t.shape, dtype=complex)
    b1 = np.empty(t.shape, dtype=complex)
    b2 = np.empty(t.shape, dtype=complex)
    for i, ti in enumerate(t):
        cs, bs = _mode_cb(float(ti), sol_s, cs0)
        ca, ba = _mode_cb(float(ti), sol_a, ca0)
        c1[i] = (cs + ca) / _SQRT2
        c2[i] = (cs - ca) / _SQRT2
        b1[i] = (bs + ba) / _SQRT2
        b2[i] = (bs - ba) / _SQRT2
    return TimeSeries(t=t, c1=c1, c2=c2, b1=b1, b2=b2,
                      source="analytic", params=params)


@dataclass(frozen=True)
class ModeSuperposition:
    """Atom-image superpositions of one mode that evolve as pure single
    exponentials (untilded/damped convention, bounded for all t >= 0):

        slow(t) = c0 cos(angle) e^{mu_slow t}
        fast(t) = i c0 sin(angle) e^{mu_fast t}

    and the original amplitude is rebuilt as
        C(t) = lam_d/(2 W) * [ i sin(angle) fast(t) + cos(angle) slow(t) ].
    """

    mode: str
    cos_angle: complex
    sin_angle: complex
    mu_slow: complex
    mu_fast: complex
    amp_slow0: complex
    amp_fast0: complex
    prefactor: complex

    def amp_slow(self, t: float) -> complex:
        return self.amp_slow0 * cmath.exp(self.mu_slow * t)

    def amp_fast(self, t: float) -> complex:
        return self.amp_fast0 * cmath.exp(self.mu_fast * t)

    def reconstruct_amplitude(self, t: float) -> complex:
        return self.prefactor * (1j * self.sin_angle * self.amp_fast(t)
                                 + self.cos_angle * self.amp_slow(t))


@dataclass(frozen=True)
class SuperpositionPair:
    """Initial-time superposition values (fast component *_s, slow component
    *_a) with the complex mixing parameters.  Only the half belonging to the
    supplied mode solution is populated; the other half is None."""

    d_s: Optional[complex]       # symmetric-mode fast superposition
    d_a: Optional[complex]       # symmetric-mode slow superposition
    g_s: Optional[complex]       # antisymmetric-mode fast superposition
    g_a: Optional[complex]       # antisymmetric-mode slow superposition
    cos_phi_sq: Optional[complex]
    cos_psi_sq: Optional[complex]
    symmetric: Optional[ModeSuperposition] = None
    antisymmetric: Optional[ModeSuperposition] = None


def _mode_superposition(mode_sol: ModeSolution, c0: complex) -> ModeSuperposition:
    w = mode_sol.rabi_eff
    lam_d = mode_sol.lam_d
    q = mode_sol.q
    cos_sq = 0.5 + w / lam_d
    cos_angle = cmath.sqrt(cos_sq)
    # Pairing constraint: sin chosen so that the fast/slow split matches the
    # tilde-frame eigenvectors (sin * (q + W) = -Omega * cos).
    sin_angle = -mode_sol.omega_mode * cos_angle / (q + w)
    return ModeSuperposition(
        mode=mode_sol.mode,
        cos_angle=cos_angle,
        sin_angle=sin_angle,
        mu_slow=mode_sol.mu_slow,
        mu_fast=mode_sol.mu_fast,
        amp_slow0=c0 * cos_angle,
        amp_fast0=1j * c0 * sin_angle,
        prefactor=lam_d / (2.0 * w),
    )


def superpositions(mode_sol: ModeSolution,
                   state: AmplitudeState) -> SuperpositionPair:
    """Decompose one mode's initial amplitude into its two single-exponential
    atom-image superpositions.  Undefined at the critical point (the two
    exponentials degenerate)."""
    if mode_sol.is_critical:
        raise UnsupportedConfigError(
            "superpositions degenerate at the critical point")
    _check_initial(state)
    if mode_sol.mode == "symmetric":
        sup = _mode_superposition(mode_sol, state.cs)
        return SuperpositionPair(
            d_s=sup.amp_fast0, d_a=sup.amp_slow0, g_s=None, g_a=None,
            cos_phi_sq=complex(0.5 + mode_sol.rabi_eff / mode_sol.lam_d),
            cos_psi_sq=None, symmetric=sup, antisymmetric=None)
    sup = _mode_superposition(mode_sol, state.ca)
    return SuperpositionPair(
        d_s=None, d_a=None, g_s=sup.amp_fast0, g_a=sup.amp_slow0,
        cos_phi_sq=None,
        cos_psi_sq=complex(0.5 + mode_sol.rabi_eff / mode_sol.lam_d),
        symmetric=None, antisymmetric=sup)


def classify_regime(params: CouplingParams) -> str:
    """Regime letter: 'a' = both couplings below threshold u/4
    (u = sqrt(gamma^2 + 4 delta^2)), 'b' = symmetric above only,
    'c' = both above."""
    sol_s, sol_a = _mode_solutions(params)
    s_above = sol_s.regime == "above"
    a_above = sol_a.regime == "above"
    if s_above and a_above:
        return "c"
    if s_above:
        return "b"
    return "a"


def offresonant_amplitude(t: float, mode_sol: ModeSolution, c0: complex = 1.0,
                          order_check: bool = False):
    """Two-term large-detuning approximation of the mode amplitude,

        C(t) ~ c0 [ e^{-(gamma - 2i delta) (Omega^2/(2 delta^2)) t}
                    + (Omega^2/(4 delta^2)) e^{-(gamma + 2i delta) t / 2} ],

    valid up to relative corrections of order (Omega/delta)^2.  The slow
    term carries the phase Omega^2/delta; the fast term oscillates at the
    detuning delta itself.  With ``order_check`` the relative deviation from
    the exact amplitude is returned alongside the value.
    """
    if mode_sol.delta == 0:
        raise DomainError("off-resonant form requires delta != 0")
    if t < 0:
        raise DomainError("off-resonant form requires t >= 0")
    omega = mode_sol.omega_mode
    gamma = mode_sol.gamma
    delta = mode_sol.delta
    ratio_sq = omega * omega / (delta * delta)
    slow = cmath.exp(-(gamma - 2j * delta) * (0.5 * ratio_sq) * t)
    fast = 0.25 * ratio_sq * cmath.exp(-(gamma + 2j * delta) * 0.5 * t)
    approx = c0 * (slow + fast)
    if not order_check:
        return approx
    exact = amplitude_mode(t, mode_sol, c0)
    rel = abs(approx - exact) / abs(exact) if exact != 0 else math.inf
    return approx, rel
