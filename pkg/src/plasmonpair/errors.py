"""Exception hierarchy.

Two top-level families matter for the CLI exit-code contract:

* :class:`ValidationError` — bad inputs, bad configuration, out-of-domain
  arguments.  CLI exit code 1.
* :class:`NumericalError` — a computation that started from valid inputs
  failed to reach the requested accuracy or produced an unusable result.
  CLI exit code 2.
"""


class PlasmonPairError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(PlasmonPairError):
    """Invalid input values or state (CLI exit code 1)."""


class DomainError(ValidationError):
    """Argument outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """A formula diverges at the requested point (e.g. zero separation)."""


class ParameterError(ValidationError):
    """Function parameters for which the algorithm is not defined."""


class ConfigError(ValidationError):
    """Malformed configuration; carries an optional line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class StepSizeError(ConfigError):
    """Integrator step size violates the stability bound."""


class UnsupportedConfigError(ValidationError):
    """A parameter combination the model intentionally does not support."""


class SingularityError(ValidationError):
    """Evaluation exactly on a pole (e.g. a surface-mode resonance)."""


class NumericalError(PlasmonPairError):
    """Numerical failure at runtime (CLI exit code 2).

    ``achieved`` optionally records the accuracy actually reached and
    ``partial`` a partial result, so callers can report diagnostics.
    """

    def __init__(self, message, achieved=None, partial=None):
        super().__init__(message)
        self.achieved = achieved
        self.partial = partial


class FitError(NumericalError):
    """A least-squares fit could not be performed on the given window."""


class MeasurementError(NumericalError):
    """A spectral measurement found no usable structure."""
