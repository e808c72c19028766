"""Dispersive slab response, branch conventions, reflection coefficients."""
import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plasmonpair.errors import (
    DomainError,
    SingularityError,
    UnsupportedConfigError,
    ValidationError,
)
from plasmonpair.materials import (
    SlabModel,
    beta_z,
    default_model,
    dispersion,
    effective_medium,
    plasma_frequency,
    reflection_interface,
    reflection_layered,
    reflection_quasistatic,
    reflection_resonant,
)

OMEGA_S = 1.0e4  # frequency unit anchor used throughout (gamma = 1)


@pytest.fixture
def model():
    return default_model(omega_s=OMEGA_S)


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

class TestSlabModel:
    def test_zero_static_permittivity_constructible(self):
        m = SlabModel(eps_static=0.0)
        assert plasma_frequency(m) == pytest.approx(m.omega_ep)

    def test_static_at_minus_one_rejected(self):
        with pytest.raises(ValidationError):
            SlabModel(eps_static=-1.0)
        with pytest.raises(ValidationError):
            SlabModel(mu_static=-1.5)

    def test_damping_must_be_positive(self):
        with pytest.raises(ValidationError):
            SlabModel(gamma_e=0.0)
        with pytest.raises(ValidationError):
            SlabModel(gamma_m=-1e-4)

    def test_plasma_above_resonance_required(self):
        with pytest.raises(ValidationError):
            SlabModel(omega_ep=1.0, omega_eo=1.0)
        with pytest.raises(ValidationError):
            SlabModel(omega_mp=0.5, omega_mo=0.8)

    def test_default_model_lands_resonance_at_anchor(self, model):
        assert plasma_frequency(model) == pytest.approx(OMEGA_S, rel=1e-14)
        assert model.gamma_e == pytest.approx(1e-4 * OMEGA_S)
        assert model.omega_mp == model.omega_ep


# ---------------------------------------------------------------------------
# dispersion and the matched-pair resonance condition
# ---------------------------------------------------------------------------

class TestDispersion:
    def test_matched_pair_at_resonance(self, model):
        disp = dispersion(model, OMEGA_S)
        # Re eps2 = -eps1 and Re mu1 = -mu2 at the interface resonance,
        # up to O((gamma/omega_s)^2) damping corrections.
        assert disp.eps2.real == pytest.approx(-2.0, abs=1e-7)
        assert disp.mu1.real == pytest.approx(-2.0, abs=1e-7)
        assert disp.eps2.imag > 0.0
        assert disp.mu1.imag > 0.0

    def test_static_limit(self, model):
        # Drude response (zero resonance frequency): large negative real
        # part well below the plasma frequency.
        disp = dispersion(model, 1e-3 * OMEGA_S)
        assert disp.eps2.real < -1e5

    def test_high_frequency_limit(self, model):
        disp = dispersion(model, 1e3 * OMEGA_S)
        assert disp.eps2.real == pytest.approx(1.0, abs=1e-5)
        assert disp.mu1.real == pytest.approx(1.0, abs=1e-5)

    def test_rejects_nonpositive_frequency(self, model):
        with pytest.raises(DomainError):
            dispersion(model, 0.0)
        with pytest.raises(DomainError):
            dispersion(model, -1.0)

    @given(omega=st.floats(min_value=1.0, max_value=1e6))
    @settings(max_examples=60, deadline=None)
    def test_passivity(self, omega):
        # Im eps2, Im mu1 >= 0 for every positive frequency (lossy medium).
        disp = dispersion(default_model(OMEGA_S), omega)
        assert disp.eps2.imag >= 0.0
        assert disp.mu1.imag >= 0.0


class TestEffectiveMedium:
    def test_single_layer_limits(self, model):
        disp = dispersion(model, OMEGA_S)
        m2 = SlabModel(**{**model.__dict__, "d2": 0.0})
        eps_r, mu_r = effective_medium(m2, OMEGA_S)
        assert eps_r == pytest.approx(model.eps_static)
        assert mu_r == pytest.approx(disp.mu1)
        m1 = SlabModel(**{**model.__dict__, "d1": 0.0})
        eps_r, mu_r = effective_medium(m1, OMEGA_S)
        assert eps_r == pytest.approx(disp.eps2)
        assert mu_r == pytest.approx(model.mu_static)

    def test_near_zero_average_at_resonance(self, model):
        # The matched pair averages to an epsilon/mu-near-zero composite.
        eps_r, mu_r = effective_medium(model, OMEGA_S)
        assert abs(eps_r.real) < 1e-7
        assert abs(eps_r) < 2e-4
        assert abs(mu_r.real) < 1e-7
        assert abs(mu_r) < 2e-4

    def test_rejects_bad_thicknesses(self, model):
        with pytest.raises(ValidationError):
            effective_medium(SlabModel(**{**model.__dict__, "d1": -1.0}),
                             OMEGA_S)
        with pytest.raises(ValidationError):
            effective_medium(
                SlabModel(**{**model.__dict__, "d1": 0.0, "d2": 0.0}),
                OMEGA_S)


# ---------------------------------------------------------------------------
# normal wavevector branch
# ---------------------------------------------------------------------------

class TestBetaZ:
    def test_propagating(self):
        b = beta_z(1.0, 1.0, omega=10.0, k_par=6.0)
        assert b == pytest.approx(8.0, rel=1e-14)

    def test_evanescent(self):
        b = beta_z(1.0, 1.0, omega=10.0, k_par=26.0)
        assert b == pytest.approx(24j, rel=1e-14)

    @given(eps_re=st.floats(-5, 5), eps_im=st.floats(0, 2),
           mu_re=st.floats(-5, 5), mu_im=st.floats(0, 2),
           k_par=st.floats(0, 30))
    @settings(max_examples=120, deadline=None)
    def test_decaying_branch(self, eps_re, eps_im, mu_re, mu_im, k_par):
        eps = complex(eps_re, eps_im)
        mu = complex(mu_re, mu_im)
        b = beta_z(eps, mu, omega=10.0, k_par=k_par)
        assert b.imag >= 0.0
        assert abs(b * b - (eps * mu * 100.0 - k_par ** 2)) \
            <= 1e-9 * (abs(eps * mu) * 100.0 + k_par ** 2 + 1.0)


# ---------------------------------------------------------------------------
# reflection coefficients
# ---------------------------------------------------------------------------

class TestReflectionInterface:
    def test_matched_media_reflectionless(self):
        assert reflection_interface(1.0, 1.0, 1.0, 1.0, 2.0, 2.0, "p") == 0.0
        assert reflection_interface(1.0, 1.0, 1.0, 1.0, 2.0, 2.0, "s") == 0.0

    def test_antisymmetric_under_exchange(self):
        r_ij = reflection_interface(2.0, -2.0 + 0.1j, 1.0, 1.0,
                                    1.5j, 2.5j, "p")
        r_ji = reflection_interface(-2.0 + 0.1j, 2.0, 1.0, 1.0,
                                    2.5j, 1.5j, "p")
        assert r_ij == pytest.approx(-r_ji, rel=1e-14)

    def test_pole_raises(self):
        with pytest.raises(SingularityError):
            reflection_interface(1.0, -1.0, 1.0, 1.0, 1.0, 1.0, "p")

    def test_bad_polarization(self):
        with pytest.raises(ValidationError):
            reflection_interface(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, "x")


class TestReflectionResonant:
    def test_on_resonance_values(self, model):
        gamma = model.gamma_e
        r_p = reflection_resonant(model, OMEGA_S, "p")
        r_s = reflection_resonant(model, OMEGA_S, "s")
        assert r_p == pytest.approx(1.0 + 4j * OMEGA_S / (3.0 * gamma),
                                    rel=1e-12)
        assert r_s == pytest.approx(-1.0 - 4j * OMEGA_S / (3.0 * gamma),
                                    rel=1e-12)

    def test_imaginary_parts_are_lorentzian(self, model):
        gamma = model.gamma_e
        # Im r_p(dw) = (2/3) omega_s gamma / (dw^2 + gamma^2/4) -> half
        # maximum at dw = gamma/2.
        peak = reflection_resonant(model, OMEGA_S, "p").imag
        half = reflection_resonant(model, OMEGA_S + gamma / 2.0, "p").imag
        assert half == pytest.approx(0.5 * peak, rel=1e-9)

    def test_mismatched_damping_unsupported(self, model):
        bad = SlabModel(**{**model.__dict__, "gamma_m": 2e-4 * OMEGA_S})
        with pytest.raises(UnsupportedConfigError):
            reflection_resonant(bad, OMEGA_S, "p")

    def test_agreement_with_quasistatic(self, model):
        # The Lorentzian form tracks the exact quasi-static coefficient
        # across the +-10 gamma window used by the kernel quadrature.
        gamma = model.gamma_e
        worst_wide = 0.0
        worst_core = 0.0
        for n in range(-40, 41):
            dw = 0.25 * n * gamma
            omega = OMEGA_S + dw
            for pol in ("p", "s"):
                exact = reflection_quasistatic(model, omega, pol)
                approx = reflection_resonant(model, omega, pol)
                rel = abs(approx - exact) / abs(exact)
                worst_wide = max(worst_wide, rel)
                if abs(dw) <= 2.0 * gamma:
                    worst_core = max(worst_core, rel)
        assert worst_wide < 2e-3
        assert worst_core < 3.5e-4


class TestReflectionLayered:
    def test_reduces_to_quasistatic_when_evanescent(self, model):
        # Deep evanescent regime: k_par >> k and e^{-2 k_par d2} ~ 0, so the
        # three-layer coefficient collapses to the single-interface
        # quasi-static value.
        k = OMEGA_S  # c = 1
        k_par = 50.0 * k
        for pol in ("p", "s"):
            layered = reflection_layered(model, OMEGA_S, k_par, pol)
            quasi = reflection_quasistatic(model, OMEGA_S, pol)
            assert abs(layered - quasi) / abs(quasi) < 2e-3

    def test_thick_slab_forgets_backing(self, model):
        thin = SlabModel(**{**model.__dict__, "d2": 1e-6})
        thick = SlabModel(**{**model.__dict__, "d2": 10.0})
        k_par = 30.0 * OMEGA_S
        r_thin = reflection_layered(thin, OMEGA_S, k_par, "p")
        r_thick = reflection_layered(thick, OMEGA_S, k_par, "p")
        # The thin slab still sees the vacuum backing; the thick one does
        # not, so they must differ while the thick one matches quasistatic.
        quasi = reflection_quasistatic(model, OMEGA_S, "p")
        assert abs(r_thick - quasi) / abs(quasi) < 1e-6
        assert abs(r_thin - quasi) / abs(quasi) > 1e-2


def test_quasistatic_resonance_divergence():
    # As damping -> 0 the on-resonance coefficient diverges like
    # 4 omega_s / (3 gamma); with gamma > 0 the denominator keeps a tiny
    # imaginary part so the pole itself is never hit.
    weak = SlabModel(gamma_e=1e-10, gamma_m=1e-10,
                     omega_ep=math.sqrt(3.0), omega_mp=math.sqrt(3.0))
    r = reflection_quasistatic(weak, plasma_frequency(weak), "p")
    assert abs(r) > 1e9
    assert abs(r) * 1e-10 == pytest.approx(4.0 / 3.0, rel=1e-4)


def test_resonant_symmetry(model):
    # r_p(omega_s + dw) + conj(r_p(omega_s - dw)) = 2 (Lorentzian symmetry).
    gamma = model.gamma_e
    for n in (1, 3, 7):
        dw = n * gamma
        up = reflection_resonant(model, OMEGA_S + dw, "p")
        down = reflection_resonant(model, OMEGA_S - dw, "p")
        assert up + down.conjugate() == pytest.approx(2.0, abs=1e-9)
