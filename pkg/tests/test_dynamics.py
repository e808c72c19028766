"""Closed-form mode solutions, two-atom evolution, superposition splitting."""
import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from plasmonpair.coupling import CouplingParams
from plasmonpair.dynamics import (
    amplitude_mode,
    classify_regime,
    evolve,
    image_amplitudes,
    mode_pair,
    mode_solution,
    offresonant_amplitude,
    superpositions,
)
from plasmonpair.errors import (
    DomainError,
    UnsupportedConfigError,
    ValidationError,
)
from plasmonpair.series import AmplitudeState

SET1 = CouplingParams(omega0=0.15, u_factor=0.95)
SET2 = CouplingParams(omega0=0.5, u_factor=0.99)
SET6 = CouplingParams(omega0=25.0, u_factor=0.1, delta=50.0)

OMEGA_S_SET2 = 0.70533679898329422


def mp_mode_amplitude(t, omega, gamma=1.0, delta=0.0, c0=1.0):
    """Arbitrary-precision reference for the mode amplitude."""
    with mpmath.workdps(50):
        q = mpmath.mpf(gamma) / 4 + mpmath.mpc(0, delta) / 2
        w = mpmath.sqrt(q * q - mpmath.mpf(omega) ** 2)
        if mpmath.re(w) < 0:
            w = -w
        val = c0 * mpmath.exp(-q * t) * (
            mpmath.cosh(w * t)
            + (q * t if w == 0 else q * mpmath.sinh(w * t) / w))
        return complex(val)


# ---------------------------------------------------------------------------
# mode_solution
# ---------------------------------------------------------------------------

class TestModeSolution:
    def test_above_threshold_example(self):
        sol = mode_solution(0.705, gamma=1.0)
        assert sol.regime == "above"
        assert sol.rabi_eff == pytest.approx(0.65918510298701381j,
                                             rel=1e-14)
        assert sol.rate_slow == pytest.approx(0.25, rel=1e-15)
        assert sol.rate_fast == pytest.approx(0.25, rel=1e-15)

    def test_below_threshold_example(self):
        sol = mode_solution(0.0, gamma=1.0)
        assert sol.regime == "below"
        assert sol.rabi_eff == pytest.approx(0.25, rel=1e-15)
        assert sol.rate_slow == pytest.approx(0.0, abs=1e-16)
        assert sol.rate_fast == pytest.approx(0.5, rel=1e-15)

    def test_critical_example(self):
        sol = mode_solution(0.25, gamma=1.0)
        assert sol.regime == "critical"
        assert sol.is_critical
        assert abs(sol.rabi_eff) < 1e-12

    def test_frozen_set1(self):
        s = mode_solution(0.20946360065653412, 1.0, 0.0, "symmetric")
        a = mode_solution(0.033541019662496845, 1.0, 0.0, "antisymmetric")
        assert s.rabi_eff == pytest.approx(0.13647344063956181, rel=1e-13)
        assert a.rabi_eff == pytest.approx(0.2477397828367499, rel=1e-13)
        assert a.rate_slow == pytest.approx(0.0022602171632501007, rel=1e-12)
        assert s.rate_slow == pytest.approx(0.11352655936043819, rel=1e-12)
        assert s.rate_slow + s.rate_fast == pytest.approx(0.5, abs=1e-16)

    def test_frozen_set6_complex(self):
        s = mode_solution(25.0 * math.sqrt(1.1), 1.0, 50.0)
        assert s.rabi_eff.real == pytest.approx(0.1725185413920021,
                                                rel=1e-12)
        assert s.rabi_eff.imag == pytest.approx(36.227990044261689,
                                                rel=1e-13)
        assert s.mu_slow.real == pytest.approx(-0.077481458607997903,
                                               rel=1e-11)

    def test_lossless_admitted(self):
        sol = mode_solution(1.0, gamma=0.0)
        assert sol.regime == "above"
        assert sol.rabi_eff == pytest.approx(1j, rel=1e-15)
        frozen = mode_solution(0.0, gamma=0.0)
        assert frozen.regime == "critical"

    def test_validation(self):
        with pytest.raises(ValidationError):
            mode_solution(1.0, gamma=-1.0)
        with pytest.raises(ValidationError):
            mode_solution(-1.0, gamma=1.0)
        with pytest.raises(ValidationError):
            mode_solution(1.0, 1.0, 0.0, "sideways")

    @given(omega=st.floats(0.0, 50.0), gamma=st.floats(0.0, 10.0),
           delta=st.floats(-50.0, 50.0))
    @settings(max_examples=100, deadline=None)
    def test_rate_sum_and_branch(self, omega, gamma, delta):
        sol = mode_solution(omega, gamma, delta)
        assert sol.rate_slow + sol.rate_fast == pytest.approx(
            0.5 * gamma, abs=1e-12)
        assert sol.rabi_eff.real >= 0.0
        assert sol.rate_slow <= sol.rate_fast + 1e-12


# ---------------------------------------------------------------------------
# single-mode amplitudes
# ---------------------------------------------------------------------------

class TestAmplitudeMode:
    def test_frozen_oscillatory_samples(self):
        sol = mode_solution(OMEGA_S_SET2, 1.0)
        c0 = 1.0 / math.sqrt(2.0)
        assert amplitude_mode(1.0, sol, c0).real \
            == pytest.approx(0.56310583720669246, rel=1e-13)
        assert amplitude_mode(5.0, sol, c0).real \
            == pytest.approx(-0.21206622958637609, rel=1e-13)
        assert amplitude_mode(10.0, sol, c0).real \
            == pytest.approx(0.061994986726868761, rel=1e-12)

    def test_initial_value_identity(self):
        for omega, delta in ((0.3, 0.0), (2.0, 5.0), (0.0, 0.0)):
            sol = mode_solution(omega, 1.0, delta)
            c, b = mode_pair(0.0, sol, 0.8 - 0.1j)
            assert c == pytest.approx(0.8 - 0.1j, abs=1e-15)
            assert b == pytest.approx(0.0, abs=1e-15)

    def test_critical_closed_form(self):
        sol = mode_solution(0.25, 1.0)
        c, b = mode_pair(4.0, sol, 1.0)
        assert c.real == pytest.approx(2.0 / math.e, rel=1e-14)
        assert b == pytest.approx(1j / math.e, rel=1e-14)

    def test_near_critical_continuity(self):
        # Just off the degenerate point the generic formulas must match the
        # critical limit smoothly.
        exact = 2.0 / math.e
        for eps in (1e-10, 1e-7, 1e-5):
            sol = mode_solution(0.25 * (1.0 + eps), 1.0)
            c = amplitude_mode(4.0, sol, 1.0)
            assert c.real == pytest.approx(exact, rel=1e-4 * max(eps, 1e-6)
                                           / 1e-6)

    @pytest.mark.parametrize("t", [100.0, 1000.0, 1412.0, 1414.0, 5000.0])
    def test_long_time_against_mpmath(self, t):
        # Crosses the cosh/sinh -> two-exponential switch at |W t| ~ 350
        # (t ~ 1413 for this mode) without losing accuracy or overflowing.
        omega_a = 0.033541019662496845
        sol = mode_solution(omega_a, 1.0, 0.0, "antisymmetric")
        ours = amplitude_mode(t, sol, 1.0)
        ref = mp_mode_amplitude(t, omega_a)
        assert cmath.isfinite(ours)
        assert ours == pytest.approx(ref, rel=1e-10)

    def test_negative_time_rejected(self):
        with pytest.raises(DomainError):
            amplitude_mode(-0.1, mode_solution(1.0, 1.0), 1.0)

    @given(omega=st.floats(0.0, 30.0), gamma=st.floats(0.01, 5.0),
           delta=st.floats(-30.0, 30.0), t=st.floats(0.0, 50.0))
    @settings(max_examples=150, deadline=None)
    def test_mode_norm_bound(self, omega, gamma, delta, t):
        # |C|^2 + |B|^2 <= |c0|^2: the mode exchanges excitation with one
        # lossy oscillator and can only lose norm.
        sol = mode_solution(omega, gamma, delta)
        c, b = mode_pair(t, sol, 1.0)
        assert abs(c) ** 2 + abs(b) ** 2 <= 1.0 + 1e-9

    @given(omega=st.floats(0.01, 10.0), gamma=st.floats(0.01, 4.0),
           delta=st.floats(-10.0, 10.0), t=st.floats(0.0, 20.0),
           scale=st.floats(0.1, 10.0))
    @settings(max_examples=100, deadline=None)
    def test_scale_invariance(self, omega, gamma, delta, t, scale):
        # (Omega, gamma, delta) -> k * (...) with t -> t/k is an exact
        # symmetry of the dynamics (pure unit change).
        base = amplitude_mode(t, mode_solution(omega, gamma, delta), 1.0)
        scaled = amplitude_mode(t / scale,
                                mode_solution(omega * scale, gamma * scale,
                                              delta * scale), 1.0)
        assert scaled == pytest.approx(base, rel=1e-9, abs=1e-12)


# ---------------------------------------------------------------------------
# two-atom evolution
# ---------------------------------------------------------------------------

class TestEvolve:
    def test_frozen_set2_trajectory(self):
        ts = evolve(np.array([0.0, 1.0, 5.0, 10.0]), SET2,
                    AmplitudeState.from_label("e1g2"))
        assert ts.c1[1] == pytest.approx(0.89764340984177667, rel=1e-13)
        assert ts.c2[1] == pytest.approx(-0.101291497812616, rel=1e-12)
        assert ts.p1[1] == pytest.approx(0.80576369123237185, rel=1e-13)
        assert ts.p2[1] == pytest.approx(0.010259967529123192, rel=1e-12)
        conc = ts.concurrence_series()
        assert conc[1] == pytest.approx(0.18184729096899498, rel=1e-12)
        assert ts.c1[2] == pytest.approx(0.34216971900706419, rel=1e-12)
        assert ts.c2[2] == pytest.approx(-0.64207665700944377, rel=1e-12)
        assert conc[2] == pytest.approx(0.43939837861983302, rel=1e-12)
        assert ts.c1[3] == pytest.approx(0.52407388776288467, rel=1e-12)
        assert ts.c2[3] == pytest.approx(-0.43639973673460686, rel=1e-12)
        assert conc[3] == pytest.approx(0.45741141329840955, rel=1e-12)

    def test_frozen_set6_trajectory(self):
        ts = evolve(np.array([0.1, 1.0]), SET6,
                    AmplitudeState.from_label("e1g2"))
        assert ts.c1[0] == pytest.approx(
            0.56865172997235217 + 0.75971983705429724j, rel=1e-12)
        assert ts.c2[0] == pytest.approx(
            -0.05745898187668111 + 0.020710901219656713j, rel=1e-11)
        assert ts.concurrence_series()[0] == pytest.approx(
            0.11592133934868051, rel=1e-11)
        assert ts.c1[1] == pytest.approx(
            -0.35883974881426741 - 0.35395859234099603j, rel=1e-12)
        assert ts.c2[1] == pytest.approx(
            0.53279796456998712 - 0.30598086358605147j, rel=1e-12)
        assert ts.concurrence_series()[1] == pytest.approx(
            0.61936857281905065, rel=1e-12)

    def test_frozen_set1_late_plateau(self):
        ts = evolve(np.array([100.0]), SET1,
                    AmplitudeState.from_label("e1g2"))
        assert ts.c1[0] == pytest.approx(0.40067812563831848, rel=1e-12)
        assert ts.c2[0] == pytest.approx(-0.40066150507691275, rel=1e-12)
        assert ts.concurrence_series()[0] == pytest.approx(
            0.32107260173929005, rel=1e-12)

    def test_image_amplitudes_frozen(self):
        ts = image_amplitudes(np.array([1.0]), SET2,
                              AmplitudeState.from_label("e1g2"))
        assert ts.b1[0] == pytest.approx(0.27483963783436933j, rel=1e-12)
        assert ts.b2[0] == pytest.approx(0.23550902841783848j, rel=1e-12)

    def test_exchange_symmetry(self):
        t = np.linspace(0.0, 8.0, 41)
        fwd = evolve(t, SET2, AmplitudeState.from_label("e1g2"))
        rev = evolve(t, SET2, AmplitudeState.from_label("e2g1"))
        assert np.max(np.abs(fwd.c1 - rev.c2)) < 1e-15
        assert np.max(np.abs(fwd.c2 - rev.c1)) < 1e-15

    def test_full_interaction_freezes_antisymmetric_state(self):
        # U = 1 decouples the antisymmetric combination entirely.
        params = CouplingParams(omega0=1.0, u_factor=1.0)
        t = np.linspace(0.0, 30.0, 61)
        ts = evolve(t, params, AmplitudeState.from_label("antisym"))
        assert np.max(np.abs(ts.c1 - ts.c1[0])) < 1e-14
        assert np.max(np.abs(ts.c2 - ts.c2[0])) < 1e-14

    def test_lossless_oscillation(self):
        # gamma = 0, delta = 0: pure cosine at the mode coupling.
        params = CouplingParams(omega0=1.0, u_factor=1.0, gamma=0.0)
        omega_s = math.sqrt(2.0)
        t = np.linspace(0.0, 10.0 * 2.0 * math.pi / omega_s, 301)
        ts = evolve(t, params, AmplitudeState.from_label("sym"))
        cs = (ts.c1 + ts.c2) / math.sqrt(2.0)
        expected = np.cos(omega_s * t) / 1.0
        assert np.max(np.abs(cs - expected)) < 1e-12

    def test_norm_monotone_and_rate_identity(self):
        # d/dt N = -gamma (|b1|^2 + |b2|^2), checked by central differences.
        h = 1e-3
        t = np.arange(0.0, 10.0 + h, h)
        ts = image_amplitudes(t, SET2, AmplitudeState.from_label("e1g2"))
        norm = ts.norm
        assert np.all(np.diff(norm) <= 1e-12)
        dn_dt = (norm[2:] - norm[:-2]) / (2.0 * h)
        sink = -SET2.gamma * (np.abs(ts.b1) ** 2 + np.abs(ts.b2) ** 2)[1:-1]
        assert np.max(np.abs(dn_dt - sink)) < 1e-5

    def test_initial_state_validation(self):
        t = np.array([0.0, 1.0])
        with pytest.raises(ValidationError):
            evolve(t, SET2, AmplitudeState(1.0, 1.0))  # norm 2
        with pytest.raises(ValidationError):
            evolve(t, SET2, AmplitudeState(1.0, 0.0, t=1.0))
        with pytest.raises(ValidationError):
            evolve(t, SET2, AmplitudeState(1.0, 0.0, b1=0.1))
        with pytest.raises(DomainError):
            evolve(np.array([-1.0]), SET2, AmplitudeState.from_label("e1g2"))


# ---------------------------------------------------------------------------
# superpositions
# ---------------------------------------------------------------------------

class TestSuperpositions:
    def test_frozen_mixing_angles_set2(self):
        sol = mode_solution(OMEGA_S_SET2, 1.0, 0.0, "symmetric")
        pair = superpositions(sol, AmplitudeState.from_label("e1g2"))
        sup = pair.symmetric
        assert sup is not None and pair.antisymmetric is None
        assert sup.cos_angle == pytest.approx(
            0.97741332044498668 + 0.67478648399571121j, rel=1e-13)
        assert sup.sin_angle == pytest.approx(
            -0.97741332044498668 + 0.67478648399571121j, rel=1e-13)
        assert pair.cos_phi_sq == pytest.approx(
            0.5 + 2.0 * 0.65954529791364596j, rel=1e-13)
        assert pair.d_s == sup.amp_fast0
        assert pair.d_a == sup.amp_slow0
        assert pair.g_s is None and pair.g_a is None

    def test_antisymmetric_half(self):
        sol = mode_solution(0.05, 1.0, 0.0, "antisymmetric")
        pair = superpositions(sol, AmplitudeState.from_label("e1g2"))
        assert pair.symmetric is None and pair.antisymmetric is not None
        assert pair.d_s is None and pair.g_s is not None
        assert pair.cos_psi_sq is not None and pair.cos_phi_sq is None

    @pytest.mark.parametrize("omega,delta", [(0.705, 0.0), (0.05, 0.0),
                                             (25.0, 50.0), (0.1, 0.0)])
    def test_trig_identity_and_reconstruction(self, omega, delta):
        sol = mode_solution(omega, 1.0, delta, "symmetric")
        pair = superpositions(sol, AmplitudeState.from_label("e1g2"))
        sup = pair.symmetric
        ident = sup.cos_angle ** 2 + sup.sin_angle ** 2
        assert ident == pytest.approx(1.0, abs=1e-12)
        c0 = AmplitudeState.from_label("e1g2").cs
        for t in (0.0, 0.7, 3.0, 12.0):
            direct = amplitude_mode(t, sol, c0)
            rebuilt = sup.reconstruct_amplitude(t)
            assert rebuilt == pytest.approx(direct, rel=1e-10, abs=1e-12)

    def test_components_decay_at_advertised_rates(self):
        sol = mode_solution(0.05, 1.0, 0.0, "antisymmetric")
        pair = superpositions(sol, AmplitudeState.from_label("e1g2"))
        sup = pair.antisymmetric
        t0, t1 = 5.0, 45.0
        slow_rate = -(math.log(abs(sup.amp_slow(t1)))
                      - math.log(abs(sup.amp_slow(t0)))) / (t1 - t0)
        fast_rate = -(math.log(abs(sup.amp_fast(t1)))
                      - math.log(abs(sup.amp_fast(t0)))) / (t1 - t0)
        assert slow_rate == pytest.approx(sol.rate_slow, rel=1e-10)
        assert fast_rate == pytest.approx(sol.rate_fast, rel=1e-10)

    def test_critical_point_unsupported(self):
        sol = mode_solution(0.25, 1.0)
        with pytest.raises(UnsupportedConfigError):
            superpositions(sol, AmplitudeState.from_label("e1g2"))

    @given(omega=st.floats(0.01, 20.0), delta=st.floats(-20.0, 20.0))
    @settings(max_examples=80, deadline=None)
    def test_identity_holds_generically(self, omega, delta):
        sol = mode_solution(omega, 1.0, delta)
        assume(not sol.is_critical)
        pair = superpositions(sol, AmplitudeState.from_label("e1g2"))
        sup = pair.symmetric
        assert sup.cos_angle ** 2 + sup.sin_angle ** 2 \
            == pytest.approx(1.0, abs=1e-9)
        assert sup.reconstruct_amplitude(0.0) == pytest.approx(
            AmplitudeState.from_label("e1g2").cs, rel=1e-9, abs=1e-11)


# ---------------------------------------------------------------------------
# regimes and the off-resonant approximation
# ---------------------------------------------------------------------------

class TestRegimes:
    def test_letters(self):
        assert classify_regime(SET1) == "a"
        assert classify_regime(SET2) == "b"
        assert classify_regime(CouplingParams(omega0=25.0, u_factor=0.1)) \
            == "c"
        assert classify_regime(SET6) == "b"

    def test_detuning_raises_threshold(self):
        # (omega0 = 1, U = 0) is far above threshold on resonance but drops
        # below it at delta = 50 (threshold u/4 ~ 25).
        on = CouplingParams(omega0=1.0, u_factor=0.0)
        off = CouplingParams(omega0=1.0, u_factor=0.0, delta=50.0)
        assert classify_regime(on) == "c"
        assert classify_regime(off) == "a"


class TestOffResonant:
    def test_rejects_zero_detuning_and_negative_time(self):
        with pytest.raises(DomainError):
            offresonant_amplitude(1.0, mode_solution(5.0, 1.0, 0.0))
        with pytest.raises(DomainError):
            offresonant_amplitude(-1.0, mode_solution(5.0, 1.0, 50.0))

    def test_initial_value_offset(self):
        sol = mode_solution(5.0, 1.0, 50.0)
        val = offresonant_amplitude(0.0, sol, 1.0)
        assert val == pytest.approx(1.0 + 25.0 / 10000.0, rel=1e-14)

    def test_order_check_band(self):
        sol = mode_solution(5.0, 1.0, 50.0)
        rels = [offresonant_amplitude(t, sol, 1.0, order_check=True)[1]
                for t in np.linspace(0.0, 1.0, 201)]
        sup = max(rels)
        assert 0.005 < sup < 0.03  # within 3 (Omega/delta)^2 = 0.03

    def test_slow_term_phase_rate(self):
        # The surviving term rotates at Omega^2/delta and decays at
        # Omega^2 gamma / (2 delta^2).
        sol = mode_solution(5.0, 1.0, 50.0)
        t0, t1 = 30.0, 60.0  # fast term long dead (e^{-t/2})
        v0 = offresonant_amplitude(t0, sol, 1.0)
        v1 = offresonant_amplitude(t1, sol, 1.0)
        rate = -(math.log(abs(v1)) - math.log(abs(v0))) / (t1 - t0)
        # the fast term is ~e^{-15} of the slow one at t0; allow its dregs
        assert rate == pytest.approx(25.0 / (2.0 * 2500.0), rel=1e-6)
        dphase = cmath.phase(v1 / v0)
        expected = (25.0 / 50.0) * (t1 - t0)
        assert dphase == pytest.approx(
            math.remainder(expected, 2.0 * math.pi), rel=1e-6)
