"""Derived quantities: concurrence, exponential-decay fits, and spectral
frequency measurements on sampled trajectories.

All frequencies reported here are angular (same unit as the rates), matching
the convention of the dynamical couplings.
"""
from __future__ import annotations

import math
from typing import List, Tuple

import numpy as np

from .errors import FitError, MeasurementError, ValidationError
from .series import FitRecord, FrequencyEstimate, ObservableSeries, SpectralPeak

_NORM_TOL = 1e-9


def concurrence(c1: complex, c2: complex) -> float:
    """Pairwise entanglement of the single-excitation pure state:
    2 |c1 conj(c2)|."""
    norm = abs(c1) ** 2 + abs(c2) ** 2
    if norm > 1.0 + _NORM_TOL:
        raise ValidationError(
            "amplitudes norm %.12g exceeds 1" % norm)
    return 2.0 * abs(c1 * c2.conjugate())


def concurrence_factored(cs: complex, ca: complex) -> float:
    """Same quantity from the collective amplitudes:
    |(Cs - Ca)(conj(Cs) + conj(Ca))|; agrees with ``concurrence`` to
    rounding because Cs -+ Ca = sqrt(2) c_{2,1}."""
    return abs((cs - ca) * (cs.conjugate() + ca.conjugate()))


def _select_signal(series: ObservableSeries, signal: str) -> np.ndarray:
    if signal == "p1":
        return series.p1
    if signal == "p2":
        return series.p2
    if signal == "total":
        return series.p1 + series.p2
    if signal == "concurrence":
        return series.concurrence
    raise ValidationError(
        "signal must be one of p1, p2, total, concurrence")


def extract_decay_rate(series: ObservableSeries,
                       window: Tuple[float, float],
                       convention: str = "amplitude",
                       signal: str = "p1") -> FitRecord:
    """Least-squares exponential-decay rate of a series column over a time
    window.  ``convention`` 'amplitude' fits sqrt(signal) (rate of |C|);
    'population' fits the signal itself (twice the amplitude rate for a pure
    exponential)."""
    if convention not in ("amplitude", "population"):
        raise ValidationError("convention must be 'amplitude' or 'population'")
    t0, t1 = float(window[0]), float(window[1])
    if not t1 > t0:
        raise ValidationError("window must satisfy t1 > t0")
    mask = (series.t >= t0) & (series.t <= t1)
    t = series.t[mask]
    y = _select_signal(series, signal)[mask]
    if len(t) < 3:
        raise FitError(
            "decay fit needs >= 3 samples in the window (got %d)" % len(t))
    if np.any(y <= 0):
        raise FitError("decay fit requires positive samples in the window")
    log_y = np.log(y)
    if convention == "amplitude":
        log_y = 0.5 * log_y
    slope, intercept = np.polyfit(t, log_y, 1)
    fit = slope * t + intercept
    residual = float(np.sqrt(np.mean((log_y - fit) ** 2)))
    return FitRecord(rate=float(-slope), intercept=float(intercept),
                     residual=residual, convention=convention,
                     signal=signal, window=(t0, t1))


def _spectral_peaks(t: np.ndarray, y: np.ndarray,
                    max_peaks: int = 8) -> Tuple[List[SpectralPeak], float]:
    """Hann-windowed discrete spectrum of a uniformly sampled real signal;
    local maxima refined by parabolic interpolation of the log magnitude.
    Returns peaks (angular frequency, weight normalized to the strongest)
    sorted by weight, plus the angular bin resolution."""
    n = len(t)
    if n < 8:
        raise MeasurementError("spectral estimate needs >= 8 samples")
    dt = (t[-1] - t[0]) / (n - 1)
    if dt <= 0 or not np.allclose(np.diff(t), dt, rtol=1e-6, atol=1e-12):
        raise ValidationError("spectral estimate requires a uniform grid")
    sig = np.asarray(y, dtype=float) - float(np.mean(y))
    window = np.hanning(n)
    mag = np.abs(np.fft.rfft(sig * window))
    d_omega = 2.0 * math.pi / (n * dt)
    peaks: List[SpectralPeak] = []
    for i in range(1, len(mag) - 1):
        if mag[i] > mag[i - 1] and mag[i] >= mag[i + 1] and mag[i] > 0:
            if mag[i - 1] > 0 and mag[i + 1] > 0:
                lm, l0, lp = (math.log(mag[i - 1]), math.log(mag[i]),
                              math.log(mag[i + 1]))
                denom = lm - 2.0 * l0 + lp
                shift = 0.5 * (lm - lp) / denom if denom != 0 else 0.0
                shift = max(-0.5, min(0.5, shift))
                height = math.exp(l0 - 0.25 * (lm - lp) * shift)
            else:
                shift, height = 0.0, mag[i]
            peaks.append(SpectralPeak(frequency=(i + shift) * d_omega,
                                      weight=height))
    if not peaks:
        raise MeasurementError("no spectral peak found")
    top = max(p.weight for p in peaks)
    peaks = [SpectralPeak(p.frequency, p.weight / top) for p in peaks]
    peaks.sort(key=lambda p: (-p.weight, p.frequency))
    return peaks[:max_peaks], d_omega


def exchange_frequency(series: ObservableSeries) -> FrequencyEstimate:
    """Dominant oscillation frequency of the population difference
    P1(t) - P2(t).  Requires the series to span at least three periods of
    the measured frequency."""
    diff = series.p1 - series.p2
    peaks, resolution = _spectral_peaks(series.t, diff)
    best = peaks[0]
    span = float(series.t[-1] - series.t[0])
    periods = span * best.frequency / (2.0 * math.pi)
    if periods < 3.0:
        raise MeasurementError(
            "series spans %.2f periods of the dominant component; "
            "need >= 3" % periods)
    return FrequencyEstimate(value=best.frequency, resolution=resolution,
                             weight=best.weight)


def revival_spectrum(series: ObservableSeries,
                     max_peaks: int = 8) -> List[SpectralPeak]:
    """Spectral peaks of P1(t), strongest first — the collapse/revival
    fingerprint of the above-threshold regime."""
    peaks, _ = _spectral_peaks(series.t, series.p1, max_peaks)
    return peaks
