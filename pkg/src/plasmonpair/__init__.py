"""Dissipative dynamics of two two-level atoms coupled through the
surface-plasmon resonance of a paired negative-permittivity /
negative-permeability interface.

The package provides, in dimensionless units (rates in the single-atom
free-space decay rate, times in its inverse):

* dispersive material response and interface reflection coefficients
  (:mod:`plasmonpair.materials`),
* the resonant coupling strength, the two-atom interaction function and the
  collective symmetric/antisymmetric couplings (:mod:`plasmonpair.coupling`),
* closed-form and quadrature evaluations of the interface Green-function
  diagonal, and the memory kernel built from it (:mod:`plasmonpair.greens`),
* exact single-mode and two-atom amplitude evolution, including the plasmon
  images and slow/fast superposition splitting (:mod:`plasmonpair.dynamics`),
* two independent numerical integrators used as cross-checking oracles
  (:mod:`plasmonpair.oracle`),
* estimators for decay rates, oscillation frequencies and entanglement
  (:mod:`plasmonpair.observables`),
* bundled scenarios (:mod:`plasmonpair.presets`) and a command-line runner
  (:mod:`plasmonpair.cli`).
"""

__version__ = "0.1.0"

from .coupling import (
    CollectiveCouplings,
    CouplingParams,
    Geometry,
    collective_couplings,
    coupling_strength,
    field_distribution,
    interaction_function,
)
from .dynamics import (
    ModeSolution,
    ModeSuperposition,
    SuperpositionPair,
    amplitude_mode,
    classify_regime,
    evolve,
    image_amplitudes,
    mode_pair,
    mode_solution,
    offresonant_amplitude,
    superpositions,
)
from .errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    FitError,
    MeasurementError,
    NumericalError,
    ParameterError,
    PlasmonPairError,
    SingularityError,
    StepSizeError,
    UnsupportedConfigError,
    ValidationError,
)
from .greens import (
    GreenDiagonal,
    KernelSample,
    QuadratureResult,
    QuadratureSpec,
    green_diagonal_closed,
    green_quadrature,
    green_xx_closed,
    green_zz_closed,
    kernel_from_greens,
)
from .materials import (
    ComplexPermittivityPair,
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
from .observables import (
    concurrence,
    concurrence_factored,
    exchange_frequency,
    extract_decay_rate,
    revival_spectrum,
)
from .oracle import (
    IntegratorSpec,
    integrate_ode,
    integrate_volterra,
    stability_bound,
    suggest_step,
)
from .presets import PRESETS, Preset, get_preset, preset_names
from .series import (
    AmplitudeState,
    FitRecord,
    FrequencyEstimate,
    ObservableSeries,
    SpectralPeak,
    TimeSeries,
)
from .specfun import bessel_j, complex_sqrt_principal, hyp2f1, sinhc

__all__ = [
    "__version__",
    # errors
    "PlasmonPairError", "ValidationError", "DomainError", "DivergenceError",
    "ParameterError", "ConfigError", "StepSizeError",
    "UnsupportedConfigError", "SingularityError", "NumericalError",
    "FitError", "MeasurementError",
    # special functions
    "hyp2f1", "bessel_j", "complex_sqrt_principal", "sinhc",
    # materials
    "SlabModel", "ComplexPermittivityPair", "default_model", "dispersion",
    "effective_medium", "plasma_frequency", "beta_z",
    "reflection_interface", "reflection_resonant", "reflection_quasistatic",
    "reflection_layered",
    # coupling
    "Geometry", "CouplingParams", "CollectiveCouplings",
    "coupling_strength", "interaction_function", "collective_couplings",
    "field_distribution",
    # greens
    "GreenDiagonal", "QuadratureSpec", "QuadratureResult", "KernelSample",
    "green_zz_closed", "green_xx_closed", "green_diagonal_closed",
    "green_quadrature", "kernel_from_greens",
    # series containers
    "AmplitudeState", "TimeSeries", "ObservableSeries", "FitRecord",
    "FrequencyEstimate", "SpectralPeak",
    # dynamics
    "ModeSolution", "mode_solution", "amplitude_mode", "mode_pair",
    "evolve", "image_amplitudes", "ModeSuperposition", "SuperpositionPair",
    "superpositions", "classify_regime", "offresonant_amplitude",
    # oracle integrators
    "IntegratorSpec", "stability_bound", "suggest_step", "integrate_ode",
    "integrate_volterra",
    # observables
    "concurrence", "concurrence_factored", "extract_decay_rate",
    "exchange_frequency", "revival_spectrum",
    # presets
    "Preset", "PRESETS", "preset_names", "get_preset",
]
