"""Independent numerical solvers used to validate the analytic dynamics.

Two routes that share no algebra with the closed forms:

* ``integrate_ode`` — the four-amplitude linear system (atoms + images)
      dC/dt = i M B,   dB/dt = -(gamma/2 + i delta) B + i M C
  advanced with the classical fixed-step 4th-order scheme.  For this
  constant-coefficient linear system the four Runge-Kutta stages combine
  exactly into the degree-4 Taylor polynomial of exp(hA); the propagator is
  therefore built once and applied per step.

* ``integrate_volterra`` — the memory-kernel form
      dC/dt = -Omega0^2 W . integral_0^t e^{-(gamma/2 + i delta)(t-t')} C(t') dt'
  with W = [[1, U], [U, 1]], discretized by the exponential-kernel
  recursion (O(N) instead of O(N^2)) and trapezoidal in-step quadrature,
  solved implicitly for the endpoint.

The coupling matrix M satisfies M^2 = Omega0^2 W, so its eigenmodes are the
symmetric/antisymmetric combinations with couplings Omega0 sqrt(1 +- U) —
the same collective couplings the analytic route uses.

Both solvers advance with an exact one-step matrix; sampling at the output
grid uses the m-fold power of that matrix (m a power of two), so arbitrarily
fine internal steps cost log2(m) matrix squarings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coupling import CouplingParams
from .dynamics import _check_initial, _mode_solutions
from .errors import StepSizeError, ValidationError
from .series import AmplitudeState, TimeSeries


@dataclass(frozen=True)
class IntegratorSpec:
    """Fixed-step integration request.  ``dt`` is the largest admissible
    internal step; the solver refines it to divide the output interval."""

    dt: float
    t_end: float
    method_order: int = 4

    def __post_init__(self):
        if self.dt <= 0:
            raise ValidationError("dt must be > 0")
        if self.t_end <= 0:
            raise ValidationError("t_end must be > 0")
        if self.method_order != 4:
            raise ValidationError("only the order-4 scheme is provided")


def stability_bound(params: CouplingParams) -> float:
    """Largest admissible step: min(0.01/gamma, 0.05/rho) with rho the
    fastest rate/frequency scale max(|W_s|, |W_a|, |delta|, gamma)."""
    sol_s, sol_a = _mode_solutions(params)
    rho = max(abs(sol_s.rabi_eff), abs(sol_a.rabi_eff),
              abs(params.delta), params.gamma)
    bound = math.inf
    if params.gamma > 0:
        bound = 0.01 / params.gamma
    if rho > 0:
        bound = min(bound, 0.05 / rho)
    return bound


def suggest_step(params: CouplingParams, t_end: float,
                 method: str = "ode", target: float = 1e-7) -> float:
    """Step size expected to keep the global error near ``target``:
    local truncation ~ (h*rho)^{p+1}/(p+1)! accumulated over t_end/h steps,
    with p = 4 (ode) or p = 2 (volterra trapezoid)."""
    sol_s, sol_a = _mode_solutions(params)
    rho = max(abs(sol_s.mu_slow), abs(sol_s.mu_fast),
              abs(sol_a.mu_slow), abs(sol_a.mu_fast))
    bound = stability_bound(params)
    if rho == 0:
        return bound if math.isfinite(bound) else t_end
    if method == "ode":
        h = (target * 120.0 / (t_end * rho ** 5)) ** 0.25
    elif method == "volterra":
        h = (target * 12.0 / (t_end * rho ** 3)) ** 0.5
    else:
        raise ValidationError("method must be 'ode' or 'volterra'")
    return min(h, bound)


def _coupling_matrix(params: CouplingParams) -> np.ndarray:
    """M = Omega0 sqrt(W): symmetric 2x2 with entries (sqrt(1+U) +-
    sqrt(1-U))/2 so that M^2 = Omega0^2 [[1, U], [U, 1]]."""
    sp = math.sqrt(1.0 + params.u_factor)
    sm = math.sqrt(1.0 - params.u_factor)
    m_diag = 0.5 * params.omega0 * (sp + sm)
    m_off = 0.5 * params.omega0 * (sp - sm)
    return np.array([[m_diag, m_off], [m_off, m_diag]], dtype=complex)


def _sample_grid(spec: IntegratorSpec, samples: int):
    if samples < 2:
        raise ValidationError("samples must be >= 2")
    t = np.linspace(0.0, spec.t_end, samples)
    dt_out = spec.t_end / (samples - 1)
    m = 1
    if dt_out > spec.dt:
        m = 1 << max(0, math.ceil(math.log2(dt_out / spec.dt)))
    return t, dt_out / m, m


def _matrix_power_pow2(step: np.ndarray, m: int) -> np.ndarray:
    out = step
    while m > 1:
        out = out @ out
        m >>= 1
    return out


def _validate_step(params: CouplingParams, spec: IntegratorSpec) -> None:
    bound = stability_bound(params)
    if spec.dt > bound * (1.0 + 1e-12):
        raise StepSizeError(
            "dt = %g exceeds the stability bound %g for these parameters"
            % (spec.dt, bound))


def _run_linear(step: np.ndarray, y0: np.ndarray, t: np.ndarray,
                m: int) -> np.ndarray:
    """Apply step^m per output interval, storing the state at each sample."""
    prop = _matrix_power_pow2(step, m)
    out = np.empty((len(t), len(y0)), dtype=complex)
    y = y0.astype(complex)
    out[0] = y
    for i in range(1, len(t)):
        y = prop @ y
        out[i] = y
    return out


def integrate_ode(params: CouplingParams, initial: AmplitudeState,
                  spec: IntegratorSpec, samples: int = 201) -> TimeSeries:
    """Fixed-step order-4 integration of the atom+image linear system."""
    _check_initial(initial)
    _validate_step(params, spec)
    t, h, m = _sample_grid(spec, samples)
    mc = _coupling_matrix(params)
    lam_d = 0.5 * params.gamma + 1j * params.delta
    a = np.zeros((4, 4), dtype=complex)
    a[0:2, 2:4] = 1j * mc
    a[2:4, 0:2] = 1j * mc
    a[2:4, 2:4] = -lam_d * np.eye(2)
    ha = h * a
    step = np.eye(4, dtype=complex)
    term = np.eye(4, dtype=complex)
    for k in range(1, 5):
        term = term @ ha / k
        step = step + term
    y0 = np.array([initial.c1, initial.c2, 0.0, 0.0], dtype=complex)
    out = _run_linear(step, y0, t, m)
    return TimeSeries(t=t, c1=out[:, 0], c2=out[:, 1], b1=out[:, 2],
                      b2=out[:, 3], source="ode_oracle", params=params)


def integrate_volterra(params: CouplingParams, initial: AmplitudeState,
                       spec: IntegratorSpec, samples: int = 201) -> TimeSeries:
    """Trapezoidal Volterra solver with the exponential-kernel recursion.

    State is (C1, C2, J1, J2) with J(t) = integral_0^t e^{-lam_d (t-t')}
    C(t') dt'; the image amplitudes are recovered as B = i M J.
    """
    _check_initial(initial)
    _validate_step(params, spec)
    t, h, m = _sample_grid(spec, samples)
    lam_d = 0.5 * params.gamma + 1j * params.delta
    om_sq = params.omega0 ** 2
    w = np.array([[1.0, params.u_factor], [params.u_factor, 1.0]],
                 dtype=complex)
    eye = np.eye(2, dtype=complex)
    e_fac = np.exp(-lam_d * h)
    # Implicit trapezoid for C with the recursion
    #   J_{n+1} = E J_n + (h/2)(E C_n + C_{n+1})
    # substituted into C_{n+1} = C_n - (h/2) Omega0^2 W (J_n + J_{n+1}):
    p = eye + 0.25 * om_sq * h * h * w
    p_inv = np.linalg.inv(p)
    a_cc = p_inv @ (eye - 0.25 * om_sq * h * h * e_fac * w)
    a_cj = p_inv @ (-0.5 * om_sq * h * (1.0 + e_fac) * w)
    a_jc = 0.5 * h * (e_fac * eye + a_cc)
    a_jj = e_fac * eye + 0.5 * h * a_cj
    step = np.zeros((4, 4), dtype=complex)
    step[0:2, 0:2] = a_cc
    step[0:2, 2:4] = a_cj
    step[2:4, 0:2] = a_jc
    step[2:4, 2:4] = a_jj
    y0 = np.array([initial.c1, initial.c2, 0.0, 0.0], dtype=complex)
    out = _run_linear(step, y0, t, m)
    mc = _coupling_matrix(params)
    b = (1j * mc @ out[:, 2:4].T).T
    return TimeSeries(t=t, c1=out[:, 0], c2=out[:, 1], b1=b[:, 0],
                      b2=b[:, 1], source="volterra_oracle", params=params)
