"""Named parameter sets: figure-class scenarios and the verification suite.

Each preset fixes the dimensionless triple (Omega0, U, delta) in units of
gamma = 1, an initial state label, and a sampling grid chosen so the
features of that scenario (slow decay, revivals, early concurrence peaks)
are resolved.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .coupling import CouplingParams
from .errors import ValidationError
from .series import AmplitudeState


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    omega0: float
    u_factor: float
    delta: float
    state: str
    t_end: float
    samples: int
    gamma: float = 1.0

    def to_params(self) -> CouplingParams:
        return CouplingParams(omega0=self.omega0, u_factor=self.u_factor,
                              delta=self.delta, gamma=self.gamma)

    def initial_state(self) -> AmplitudeState:
        return AmplitudeState.from_label(self.state)


def _p(name, desc, omega0, u, delta, state, t_end, samples, gamma=1.0):
    return Preset(name=name, description=desc, omega0=omega0, u_factor=u,
                  delta=delta, state=state, t_end=t_end, samples=samples,
                  gamma=gamma)


PRESETS: Dict[str, Preset] = {p.name: p for p in [
    _p("fig4", "weak coupling, both modes below threshold: slow collective "
       "decay and near-equal long-time populations",
       0.15, 0.95, 0.0, "e1g2", 2000.0, 2001),
    _p("fig5", "mixed regime: symmetric mode oscillates, antisymmetric "
       "decays", 0.5, 0.99, 0.0, "e1g2", 200.0, 2001),
    _p("fig6", "strong coupling, weak inter-atom interaction: two-frequency "
       "beats (collapse and revival)", 25.0, 0.1, 0.0, "e1g2", 60.0, 4096),
    _p("fig7", "strong coupling, strong interaction: commensurate spectrum, "
       "periodic localization", 25.0, 0.8, 0.0, "e1g2", 60.0, 4096),
    _p("fig9a-u99", "entanglement buildup from separable start, U = 0.99",
       0.15, 0.99, 0.0, "e1g2", 300.0, 3001),
    _p("fig9a-u50", "entanglement buildup from separable start, U = 0.5",
       0.15, 0.50, 0.0, "e1g2", 300.0, 3001),
    _p("fig9a-u25", "entanglement buildup from separable start, U = 0.25",
       0.15, 0.25, 0.0, "e1g2", 300.0, 3001),
    _p("fig9b-u99", "decay of initial symmetric entangled state, U = 0.99",
       0.15, 0.99, 0.0, "sym", 300.0, 3001),
    _p("fig9b-u50", "decay of initial symmetric entangled state, U = 0.5",
       0.15, 0.50, 0.0, "sym", 300.0, 3001),
    _p("fig9b-u25", "decay of initial symmetric entangled state, U = 0.25",
       0.15, 0.25, 0.0, "sym", 300.0, 3001),
    _p("fig10a", "transient entanglement above threshold, U = 0.1",
       25.0, 0.1, 0.0, "e1g2", 60.0, 4096),
    _p("fig10b", "transient entanglement above threshold, U = 0.8",
       25.0, 0.8, 0.0, "e1g2", 60.0, 4096),
    _p("fig11a", "off-resonant strong coupling, U = 0.1: concurrence beats",
       25.0, 0.1, 50.0, "e1g2", 12.0, 4096),
    _p("fig11b", "off-resonant strong coupling, U = 0.95: near-maximal "
       "transient concurrence", 25.0, 0.95, 50.0, "e1g2", 12.0, 4096),
    _p("fig12a-u95", "intermediate coupling population exchange, U = 0.95",
       1.0, 0.95, 0.0, "e1g2", 40.0, 2001),
    _p("fig12a-u99", "intermediate coupling population exchange, U = 0.99",
       1.0, 0.99, 0.0, "e1g2", 40.0, 2001),
    _p("fig12b-sym", "symmetric-state evolution at intermediate coupling",
       1.0, 0.95, 0.0, "sym", 40.0, 2001),
    _p("fig12b-antisym", "antisymmetric-state evolution at intermediate "
       "coupling", 1.0, 0.95, 0.0, "antisym", 40.0, 2001),
    _p("fig13", "long-time concurrence at intermediate coupling",
       1.0, 0.95, 0.0, "e1g2", 60.0, 3001),
    _p("sym-decay", "weak-coupling symmetric state: superradiant-like "
       "exponential decay at 2 Omega_s^2 / gamma",
       0.05, 0.25, 0.0, "sym", 7898.7, 2001),
    _p("offres-exchange", "perturbative off-resonant exchange: slow "
       "population swap plus fast ripple at the detuning",
       5.0, 0.5, 50.0, "e1g2", 40.0, 8192),
]}


# Three-way verification suite: (omega0, u_factor, delta), |e1 g2> start.
# Spans all three regimes, the exact critical point, detuned cases, and
# near-degenerate interactions.
VERIFY_SUITE: List[Tuple[float, float, float]] = [
    (0.15, 0.95, 0.0),
    (0.5, 0.99, 0.0),
    (25.0, 0.1, 0.0),
    (25.0, 0.8, 0.0),
    (0.25, 0.0, 0.0),
    (1.0, 0.95, 0.0),
    (0.15, 0.5, 5.0),
    (5.0, 0.5, 5.0),
    (3.0, 0.9, 5.0),
    (25.0, 0.1, 50.0),
    (25.0, 0.95, 50.0),
    (0.05, 0.25, 0.0),
]

# Lossless norm-conservation set (gamma = 0): maximal interaction so the
# excitation swaps coherently between the atoms and the mode.
LOSSLESS_SET: Tuple[float, float, float] = (1.0, 1.0, 0.0)


def preset_names() -> List[str]:
    return sorted(PRESETS)


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValidationError(
            "unknown preset %r; available: %s"
            % (name, ", ".join(preset_names()))) from None
