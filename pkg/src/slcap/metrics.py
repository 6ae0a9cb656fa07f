"""Loss, quality-factor, resonance and bandwidth figures for capacitive elements.

The dissipation factor is taken per frequency point as DF = ESR / |X|; points
with |X| below a small epsilon are reported as undefined rather than divided
through.  Efficiency is the complementary 1 - DF and Q its reciprocal 1 / DF.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .impedance import ImpedanceProfile

__all__ = [
    "REACTANCE_EPSILON",
    "ResonanceEstimates",
    "CapacitorMetrics",
    "dissipation_factor_profile",
    "resonant_frequency",
    "low_impedance_bandwidth",
    "metrics_report",
]

# |X| below this (ohms) makes DF = R/|X| meaningless; such points are flagged.
REACTANCE_EPSILON = 1e-3


@dataclass(frozen=True)
class ResonanceEstimates:
    """Two independent resonance estimates; either may be absent.

    ``reactance_zero_hz`` interpolates the lowest-frequency sign change of the
    reactance; ``min_magnitude_hz`` is the frequency of the interior |Z|
    minimum.  The estimates agree for a clean series resonance.
    """

    reactance_zero_hz: float | None
    min_magnitude_hz: float | None


@dataclass
class CapacitorMetrics:
    """Per-frequency loss metrics plus the sweep-level resonance/bandwidth summary."""

    frequencies_hz: np.ndarray
    esr_ohm: np.ndarray
    reactance_ohm: np.ndarray
    df: np.ndarray
    efficiency: np.ndarray
    q: np.ndarray
    df_defined: np.ndarray
    resonance: ResonanceEstimates | None = None
    resonant_frequency_hz: float | None = None
    bandwidth_hz: tuple[float, float] | None = None
    df_threshold: float | None = None
    z_threshold_ohm: float | None = None
    fraction_df_below: float | None = None
    fraction_df_undefined: float | None = None


def dissipation_factor_profile(
    profile: ImpedanceProfile, reactance_epsilon: float = REACTANCE_EPSILON
) -> CapacitorMetrics:
    """Compute DF / efficiency / Q pointwise; undefined points carry NaN."""
    if reactance_epsilon <= 0:
        raise ValueError("reactance_epsilon must be positive")
    r = np.where(profile.valid, profile.resistance, np.nan)
    x = np.where(profile.valid, profile.reactance, np.nan)
    defined = profile.valid & (np.abs(profile.reactance) >= reactance_epsilon)
    with np.errstate(divide="ignore", invalid="ignore"):
        df = np.where(defined, r / np.abs(x), np.nan)
        q = np.where(defined, np.abs(x) / r, np.nan)
    return CapacitorMetrics(
        frequencies_hz=profile.frequencies_hz,
        esr_ohm=r,
        reactance_ohm=x,
        df=df,
        efficiency=1.0 - df,
        q=q,
        df_defined=defined,
    )


def resonant_frequency(profile: ImpedanceProfile) -> ResonanceEstimates:
    """Estimate resonance two ways: reactance zero crossing and interior |Z| minimum.

    The crossing estimate linearly interpolates the lowest-frequency sign
    change of X(f); an exact interior zero flanked by opposite signs counts as
    a crossing at that sample.  Multiple crossings keep the lowest and warn.
    Either estimate is absent when the sweep provides no interior evidence.
    """
    f = profile.frequencies_hz
    x = profile.reactance
    valid = profile.valid
    n = f.size

    crossings: list[float] = []
    for i in range(n - 1):
        if not (valid[i] and valid[i + 1]):
            continue
        if x[i] == 0.0:
            if 0 < i and valid[i - 1] and x[i - 1] * x[i + 1] < 0:
                crossings.append(float(f[i]))
            continue
        if x[i] * x[i + 1] < 0:
            frac = x[i] / (x[i] - x[i + 1])
            crossings.append(float(f[i] + frac * (f[i + 1] - f[i])))

    zero_hz: float | None = None
    if crossings:
        zero_hz = crossings[0]
        if len(crossings) > 1:
            warnings.warn(
                f"{len(crossings)} reactance zero crossings; reporting the lowest",
                stacklevel=2,
            )

    min_hz: float | None = None
    mag = np.where(valid, np.abs(profile.z), np.inf)
    if np.any(valid):
        idx = int(np.argmin(mag))
        if 0 < idx < n - 1:
            min_hz = float(f[idx])

    return ResonanceEstimates(reactance_zero_hz=zero_hz, min_magnitude_hz=min_hz)


def low_impedance_bandwidth(
    profile: ImpedanceProfile, threshold_ohm: float
) -> tuple[float, float] | None:
    """Maximal contiguous band around the |Z| minimum where |Z| <= threshold.

    Edges are linearly interpolated between the last inside and first outside
    samples and clipped to the sweep ends.  Returns None when even the minimum
    exceeds the threshold.  Invalid points break contiguity; an edge against
    an invalid neighbour falls on the last valid inside sample.
    """
    if threshold_ohm <= 0:
        raise ValueError("threshold must be positive")
    f = profile.frequencies_hz
    mag = np.where(profile.valid, np.abs(profile.z), np.inf)
    n = f.size
    anchor = int(np.argmin(mag))
    if not np.isfinite(mag[anchor]) or mag[anchor] > threshold_ohm:
        return None

    lo = anchor
    while lo > 0 and mag[lo - 1] <= threshold_ohm:
        lo -= 1
    hi = anchor
    while hi < n - 1 and mag[hi + 1] <= threshold_ohm:
        hi += 1

    if lo == 0:
        f_lo = float(f[0])
    elif not np.isfinite(mag[lo - 1]):
        f_lo = float(f[lo])
    else:
        frac = (mag[lo - 1] - threshold_ohm) / (mag[lo - 1] - mag[lo])
        f_lo = float(f[lo - 1] + frac * (f[lo] - f[lo - 1]))

    if hi == n - 1:
        f_hi = float(f[n - 1])
    elif not np.isfinite(mag[hi + 1]):
        f_hi = float(f[hi])
    else:
        frac = (mag[hi + 1] - threshold_ohm) / (mag[hi + 1] - mag[hi])
        f_hi = float(f[hi + 1] - frac * (f[hi + 1] - f[hi]))

    return (f_lo, f_hi)


def metrics_report(
    profile: ImpedanceProfile,
    df_threshold: float = 0.02,
    z_threshold_ohm: float = 3.0,
    reactance_epsilon: float = REACTANCE_EPSILON,
) -> CapacitorMetrics:
    """Full metrics summary: pointwise DF set plus resonance, bandwidth and fractions."""
    if profile.n_points < 2:
        raise ValueError("metrics report needs at least two sweep points")
    if df_threshold <= 0:
        raise ValueError("df_threshold must be positive")

    metrics = dissipation_factor_profile(profile, reactance_epsilon=reactance_epsilon)
    resonance = resonant_frequency(profile)
    bandwidth = low_impedance_bandwidth(profile, z_threshold_ohm)

    n = profile.n_points
    defined = metrics.df_defined
    below = defined & (metrics.df < df_threshold)

    metrics.resonance = resonance
    metrics.resonant_frequency_hz = (
        resonance.reactance_zero_hz
        if resonance.reactance_zero_hz is not None
        else resonance.min_magnitude_hz
    )
    metrics.bandwidth_hz = bandwidth
    metrics.df_threshold = df_threshold
    metrics.z_threshold_ohm = z_threshold_ohm
    metrics.fraction_df_below = float(np.count_nonzero(below)) / n
    metrics.fraction_df_undefined = float(np.count_nonzero(~defined)) / n
    return metrics
