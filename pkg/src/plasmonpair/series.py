"""Shared immutable value types: amplitude states, sampled trajectories,
and measurement records.

All trajectory containers store the untilded (bounded) amplitudes; rates are
in units of the plasma linewidth gamma and times in 1/gamma unless the
caller declares otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import ValidationError

_SQRT2 = math.sqrt(2.0)
_NORM_TOL = 1e-9


@dataclass(frozen=True)
class AmplitudeState:
    """Single-excitation amplitudes of the two atoms and their images at one
    instant.  ``cs``/``ca`` are the symmetric/antisymmetric combinations."""

    c1: complex
    c2: complex
    b1: complex = 0.0 + 0.0j
    b2: complex = 0.0 + 0.0j
    t: float = 0.0

    @property
    def cs(self) -> complex:
        return (self.c1 + self.c2) / _SQRT2

    @property
    def ca(self) -> complex:
        return (self.c1 - self.c2) / _SQRT2

    @property
    def bs(self) -> complex:
        return (self.b1 + self.b2) / _SQRT2

    @property
    def ba(self) -> complex:
        return (self.b1 - self.b2) / _SQRT2

    @property
    def norm(self) -> float:
        return (abs(self.c1) ** 2 + abs(self.c2) ** 2
                + abs(self.b1) ** 2 + abs(self.b2) ** 2)

    @staticmethod
    def from_label(label: str,
                   custom: Optional[Tuple[complex, complex]] = None
                   ) -> "AmplitudeState":
        """Build a standard initial state: ``e1g2`` (atom 1 excited),
        ``e2g1``, ``sym``, ``antisym``, or ``custom`` with explicit
        (c1, c2) amplitudes, normalized within 1e-9."""
        if label == "e1g2":
            return AmplitudeState(1.0, 0.0)
        if label == "e2g1":
            return AmplitudeState(0.0, 1.0)
        if label == "sym":
            return AmplitudeState(1.0 / _SQRT2, 1.0 / _SQRT2)
        if label == "antisym":
            return AmplitudeState(1.0 / _SQRT2, -1.0 / _SQRT2)
        if label == "custom":
            if custom is None:
                raise ValidationError("custom state requires (c1, c2)")
            c1, c2 = complex(custom[0]), complex(custom[1])
            n = abs(c1) ** 2 + abs(c2) ** 2
            if abs(n - 1.0) > _NORM_TOL:
                raise ValidationError(
                    "custom state norm %.12g deviates from 1 by more than "
                    "1e-9" % n)
            return AmplitudeState(c1, c2)
        raise ValidationError("unknown state label %r" % (label,))


@dataclass(frozen=True)
class TimeSeries:
    """Sampled two-atom trajectory.  ``b1``/``b2`` are present only for
    evolutions that track the image (plasma) amplitudes."""

    t: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    b1: Optional[np.ndarray] = None
    b2: Optional[np.ndarray] = None
    source: str = "analytic"
    params: Optional[object] = None

    def __post_init__(self):
        n = len(self.t)
        for name in ("c1", "c2"):
            if len(getattr(self, name)) != n:
                raise ValidationError("%s length mismatch with t" % name)
        for name in ("b1", "b2"):
            arr = getattr(self, name)
            if arr is not None and len(arr) != n:
                raise ValidationError("%s length mismatch with t" % name)

    @property
    def p1(self) -> np.ndarray:
        return np.abs(self.c1) ** 2

    @property
    def p2(self) -> np.ndarray:
        return np.abs(self.c2) ** 2

    @property
    def norm(self) -> np.ndarray:
        total = self.p1 + self.p2
        if self.b1 is not None:
            total = total + np.abs(self.b1) ** 2
        if self.b2 is not None:
            total = total + np.abs(self.b2) ** 2
        return total

    def concurrence_series(self) -> np.ndarray:
        return 2.0 * np.abs(self.c1 * np.conj(self.c2))

    def sup_deviation(self, other: "TimeSeries") -> float:
        """Largest amplitude discrepancy against another trajectory sampled
        on the same grid."""
        if len(other.t) != len(self.t):
            raise ValidationError("trajectories sampled on different grids")
        if not np.allclose(self.t, other.t, rtol=0.0, atol=1e-12):
            raise ValidationError("trajectories sampled on different grids")
        dev = max(np.max(np.abs(self.c1 - other.c1)),
                  np.max(np.abs(self.c2 - other.c2)))
        if (self.b1 is not None and other.b1 is not None):
            dev = max(dev, np.max(np.abs(self.b1 - other.b1)),
                      np.max(np.abs(self.b2 - other.b2)))
        return float(dev)


@dataclass(frozen=True)
class ObservableSeries:
    """Populations and concurrence derived from a trajectory."""

    t: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    concurrence: np.ndarray
    source: str = "analytic"

    @staticmethod
    def from_timeseries(ts: TimeSeries) -> "ObservableSeries":
        return ObservableSeries(
            t=ts.t, p1=ts.p1, p2=ts.p2,
            concurrence=ts.concurrence_series(), source=ts.source)


@dataclass(frozen=True)
class FitRecord:
    """Exponential-decay fit result: d/dt log(signal) = -rate."""

    rate: float
    intercept: float
    residual: float
    convention: str          # "amplitude" or "population"
    signal: str              # which series column was fitted
    window: Tuple[float, float]


@dataclass(frozen=True)
class FrequencyEstimate:
    """Spectral peak location with the grid resolution it was estimated at."""

    value: float
    resolution: float
    weight: float


@dataclass(frozen=True)
class SpectralPeak:
    frequency: float
    weight: float
