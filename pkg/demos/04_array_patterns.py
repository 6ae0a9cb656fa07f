"""
Radiation patterns, directivity, and lobe structure
===================================================

Far-field intensity for small arrays of idealized elements, integrated
into a directivity figure, sliced into a polar cut, and summarized as a
list of lobes.  Everything is a plain numpy array on a theta/phi grid.
"""

import math

import numpy as np

from slcap import (
    HERTZIAN_DIPOLE,
    SPEED_OF_LIGHT,
    ArrayLayout,
    ElementModel,
    directivity,
    evaluate_pattern,
    find_lobes,
    gain,
    polar_cut,
)

F0 = 1.0e9
LAMBDA = SPEED_OF_LIGHT / F0


def pair(spacing_wl: float, kind: str = "isotropic") -> ArrayLayout:
    """Two in-phase elements straddling the origin on the z axis."""
    half = 0.5 * spacing_wl * LAMBDA
    return ArrayLayout(
        positions_m=np.array([[0.0, 0.0, -half], [0.0, 0.0, half]]),
        weights=np.ones(2, dtype=complex),
        frequency_hz=F0,
        element=ElementModel(kind=kind),
    )


# ----------------------------------------------------------------------
# A single Hertzian dipole: the textbook sin^2(theta) doughnut with
# directivity exactly 1.5.  The default grid is one degree in each
# direction; the quadrature reproduces the analytic value to a fraction
# of a percent.

dipole = ArrayLayout(
    positions_m=np.zeros((1, 3)),
    weights=np.ones(1, dtype=complex),
    frequency_hz=F0,
    element=ElementModel(kind=HERTZIAN_DIPOLE),
)
pattern = evaluate_pattern(dipole)
d = directivity(pattern)
print(f"hertzian dipole directivity: {d:.5f} (analytic 1.5)")
print(f"with 80% radiation efficiency, gain = {gain(d, 0.8):.3f}")

# ----------------------------------------------------------------------
# Two isotropic elements half a wavelength apart: broadside pair,
# directivity 2 (analytic).

print(f"half-wave pair directivity: {directivity(evaluate_pattern(pair(0.5))):.5f}")

# ----------------------------------------------------------------------
# Stretch the spacing to a full wavelength and grating lobes appear: the
# axial polar cut now shows four main lobes of equal strength.

full_wave = evaluate_pattern(pair(1.0))
lobes = find_lobes(full_wave, main_threshold_db=10.0)
print(f"lambda-spaced pair: {len(lobes)} lobes")
for lb in lobes:
    tag = "main" if lb.is_main else "minor"
    print(f"  {math.degrees(lb.angle_rad):6.1f} deg  {lb.level_db:7.2f} dB  {tag}")

# ----------------------------------------------------------------------
# A four-element broadside array trades beamwidth for sidelobes.  At the
# usual 10 dB threshold the sidelobes are classified as minor.

four = ArrayLayout(
    positions_m=np.array([[0.0, 0.0, (k - 1.5) * 0.5 * LAMBDA] for k in range(4)]),
    weights=np.ones(4, dtype=complex),
    frequency_hz=F0,
    element=ElementModel(),
)
lobes = find_lobes(evaluate_pattern(four), main_threshold_db=10.0)
main = [lb for lb in lobes if lb.is_main]
minor = [lb for lb in lobes if not lb.is_main]
print(f"broadside four: {len(main)} main, {len(minor)} sidelobes at "
      f"{minor[0].level_db:.2f} dB")

# ----------------------------------------------------------------------
# The cut itself is just two arrays -- angles around the full circle and
# the intensity along them -- ready for any plotting tool.

angles, u = polar_cut(full_wave, phi_cut_rad=0.0)
peak = u.max()
print(f"cut samples: {angles.size}, peak intensity {peak:.3f}, "
      f"nulls at {np.count_nonzero(u < 1e-9 * peak)} samples")
