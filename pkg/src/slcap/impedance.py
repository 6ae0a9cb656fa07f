"""Impedance views of S-parameter sweeps and canonical series-RLC synthesis.

Three fixture conventions are supported for turning a measured sweep into a
device impedance: a 1-port reflection measurement, and 2-port series-through /
shunt-through insertions.  The series/shunt extractions are exact inverses of
the corresponding ideal embeddings, which :func:`synthesize_series_rlc` uses to
produce reference sweeps for an R-L-C element in any of the three fixtures.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .touchstone import NetworkData

__all__ = [
    "REFLECTION",
    "SERIES_THROUGH",
    "SHUNT_THROUGH",
    "FIXTURE_MODES",
    "SingularityError",
    "ImpedanceProfile",
    "SeriesRlcModel",
    "impedance_from_s11",
    "series_impedance_from_s21",
    "shunt_impedance_from_s21",
    "reflection_coefficient",
    "impedance_profile",
    "impedance_at",
    "synthesize_series_rlc",
]

# Fixture conventions for de-embedding a device impedance from S-parameters.
REFLECTION = "reflection"
SERIES_THROUGH = "series-through"
SHUNT_THROUGH = "shunt-through"
FIXTURE_MODES = (REFLECTION, SERIES_THROUGH, SHUNT_THROUGH)

_NEGATIVE_R_TOL = -1e-9


class SingularityError(ArithmeticError):
    """A conversion hit a pole (e.g. s11 = 1 has no finite impedance)."""


@dataclass
class ImpedanceProfile:
    """Complex impedance versus frequency, with a per-point validity mask.

    Points where the extraction was singular carry ``valid == False`` and a
    NaN impedance; downstream metrics skip them instead of failing the sweep.
    """

    frequencies_hz: np.ndarray
    z: np.ndarray
    valid: np.ndarray | None = None

    def __post_init__(self):
        f = np.asarray(self.frequencies_hz, dtype=float)
        z = np.asarray(self.z, dtype=complex)
        if f.ndim != 1 or f.size == 0 or z.shape != f.shape:
            raise ValueError("frequencies and z must be matching non-empty 1-D arrays")
        if not np.all(np.isfinite(f)) or not np.all(f > 0):
            raise ValueError("frequencies must be finite and positive")
        if f.size > 1 and not np.all(np.diff(f) > 0):
            raise ValueError("frequencies must be strictly increasing")
        if self.valid is None:
            valid = np.isfinite(z.real) & np.isfinite(z.imag)
        else:
            valid = np.asarray(self.valid, dtype=bool)
            if valid.shape != f.shape:
                raise ValueError("valid mask must match the frequency axis")
        self.frequencies_hz = f
        self.z = z
        self.valid = valid

    @property
    def resistance(self) -> np.ndarray:
        return self.z.real

    @property
    def reactance(self) -> np.ndarray:
        return self.z.imag

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.z)

    @property
    def n_points(self) -> int:
        return self.frequencies_hz.size


def impedance_from_s11(s11: complex, z0: float = 50.0) -> complex:
    """Reflection view: Z = z0 (1 + s11) / (1 - s11)."""
    den = 1.0 - s11
    if den == 0:
        raise SingularityError("s11 = 1 corresponds to an infinite impedance")
    return z0 * (1.0 + s11) / den


def series_impedance_from_s21(s21: complex, z0: float = 50.0) -> complex:
    """Series-through view: Z = 2 z0 (1 - s21) / s21."""
    if s21 == 0:
        raise SingularityError("s21 = 0 corresponds to an infinite series impedance")
    return 2.0 * z0 * (1.0 - s21) / s21


def shunt_impedance_from_s21(s21: complex, z0: float = 50.0) -> complex:
    """Shunt-through view: Z = (z0 / 2) s21 / (1 - s21)."""
    den = 1.0 - s21
    if den == 0:
        raise SingularityError("s21 = 1 corresponds to an infinite shunt impedance")
    return (z0 / 2.0) * s21 / den


def reflection_coefficient(z: complex, z0: float = 50.0) -> complex:
    """Gamma = (z - z0) / (z + z0) against a real positive reference."""
    den = z + z0
    if den == 0:
        raise SingularityError("z = -z0 has no reflection coefficient")
    return (z - z0) / den


def impedance_profile(net: NetworkData, mode: str = SERIES_THROUGH) -> ImpedanceProfile:
    """Extract the device impedance sweep from ``net`` under a fixture convention.

    Singular points (e.g. s21 = 0 in series-through) are flagged invalid
    rather than aborting the sweep.  A warning is issued if any valid point
    shows negative resistance, which passive data should not produce.
    """
    if mode not in FIXTURE_MODES:
        raise ValueError(f"unknown fixture mode {mode!r}")
    if mode in (SERIES_THROUGH, SHUNT_THROUGH) and net.n_ports < 2:
        raise ValueError(f"{mode} extraction requires a 2-port network")

    z0 = net.z0_ohm
    with np.errstate(divide="ignore", invalid="ignore"):
        if mode == REFLECTION:
            s = net.s11()
            z = z0 * (1.0 + s) / (1.0 - s)
        elif mode == SERIES_THROUGH:
            s = net.s21()
            z = 2.0 * z0 * (1.0 - s) / s
        else:
            s = net.s21()
            z = (z0 / 2.0) * s / (1.0 - s)

    valid = np.isfinite(z.real) & np.isfinite(z.imag)
    z = np.where(valid, z, complex(np.nan, np.nan))
    if np.any(z.real[valid] < _NEGATIVE_R_TOL):
        warnings.warn(
            "negative resistance extracted from passive data; check the fixture mode",
            stacklevel=2,
        )
    return ImpedanceProfile(frequencies_hz=net.frequencies_hz, z=z, valid=valid)


def impedance_at(profile: ImpedanceProfile, f_hz: float) -> complex:
    """Linearly interpolated impedance at ``f_hz``, using the valid points only."""
    f = profile.frequencies_hz[profile.valid]
    z = profile.z[profile.valid]
    if f.size == 0:
        raise ValueError("profile has no valid points")
    if not (f[0] <= f_hz <= f[-1]):
        raise ValueError("frequency outside the sweep")
    return complex(np.interp(f_hz, f, z.real), np.interp(f_hz, f, z.imag))


@dataclass(frozen=True)
class SeriesRlcModel:
    """Ideal series R-L-C one-port: Z(f) = r + j(2*pi*f*l - 1/(2*pi*f*c))."""

    r_ohm: float
    l_h: float
    c_f: float

    def __post_init__(self):
        if not (self.r_ohm >= 0 and math.isfinite(self.r_ohm)):
            raise ValueError("r_ohm must be finite and non-negative")
        if not (self.l_h >= 0 and math.isfinite(self.l_h)):
            raise ValueError("l_h must be finite and non-negative")
        if not (self.c_f > 0 and math.isfinite(self.c_f)):
            raise ValueError("c_f must be finite and positive")

    @property
    def resonant_frequency_hz(self) -> float | None:
        """Series resonance 1 / (2 pi sqrt(L C)); absent for l_h = 0."""
        if self.l_h == 0:
            return None
        return 1.0 / (2.0 * math.pi * math.sqrt(self.l_h * self.c_f))

    def impedance(self, frequencies_hz) -> np.ndarray:
        f = np.asarray(frequencies_hz, dtype=float)
        w = 2.0 * np.pi * f
        return self.r_ohm + 1j * (w * self.l_h - 1.0 / (w * self.c_f))


def synthesize_series_rlc(
    model: SeriesRlcModel,
    frequencies_hz,
    z0: float = 50.0,
    mode: str = SERIES_THROUGH,
) -> NetworkData:
    """Embed an ideal series RLC in a fixture and return the exact S-parameters.

    The embeddings are the algebraic inverses of the extractions in
    :func:`impedance_profile`, so synthesize -> extract is an identity up to
    rounding.  ``mode`` selects a 1-port reflection standard or a 2-port
    series/shunt insertion.
    """
    if mode not in FIXTURE_MODES:
        raise ValueError(f"unknown fixture mode {mode!r}")
    if not (z0 > 0 and math.isfinite(z0)):
        raise ValueError("z0 must be positive and finite")
    f = np.asarray(frequencies_hz, dtype=float)
    z = model.impedance(f)

    if mode == REFLECTION:
        s = ((z - z0) / (z + z0)).reshape(-1, 1, 1)
    else:
        n = f.size
        s = np.empty((n, 2, 2), dtype=complex)
        if mode == SERIES_THROUGH:
            den = z + 2.0 * z0
            s[:, 0, 0] = s[:, 1, 1] = z / den
            s[:, 1, 0] = s[:, 0, 1] = 2.0 * z0 / den
        else:  # shunt-through
            den = 2.0 * z + z0
            s[:, 0, 0] = s[:, 1, 1] = -z0 / den
            s[:, 1, 0] = s[:, 0, 1] = 2.0 * z / den
    return NetworkData(frequencies_hz=f, s=s, z0_ohm=z0)
