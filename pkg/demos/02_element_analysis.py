"""
Impedance extraction and loss metrics for a capacitive element
==============================================================

From raw S-parameters to the numbers a designer actually wants: the
equivalent series resistance, the dissipation factor and efficiency, the
resonance, and the band over which the element stays low-impedance.
"""

import numpy as np

from slcap import (
    SeriesRlcModel,
    dissipation_factor_profile,
    impedance_profile,
    low_impedance_bandwidth,
    metrics_report,
    resonant_frequency,
    synthesize_series_rlc,
)

# ----------------------------------------------------------------------
# Model an element as a series RLC: 1 ohm of loss, 2 nH of parasitic
# inductance, 1 pF of capacitance.  Its self-resonance is where the two
# reactances cancel.

model = SeriesRlcModel(r_ohm=1.0, l_h=2e-9, c_f=1e-12)
print(f"analytic self-resonance: {model.resonant_frequency_hz / 1e9:.4f} GHz")

f = np.linspace(1e8, 2e10, 1000)
net = synthesize_series_rlc(model, f)

# ----------------------------------------------------------------------
# De-embed the impedance from the two-port series-through measurement.
# The extraction is the exact inverse of the embedding, so the recovered
# ESR is the model's resistance to machine precision.

profile = impedance_profile(net)
print(f"recovered ESR: {profile.resistance.mean():.9f} ohm (worst "
      f"deviation {np.abs(profile.resistance - 1.0).max():.2e})")

# ----------------------------------------------------------------------
# Loss metrics.  DF = R/|X| and efficiency = 1 - DF; both are left
# undefined in the dead band where |X| is too small to divide by.

metrics = dissipation_factor_profile(profile)
defined = ~np.isnan(metrics.df)
best = np.nanargmin(metrics.df)
print(f"lowest DF: {metrics.df[best]:.4%} at {f[best] / 1e9:.2f} GHz "
      f"(efficiency {metrics.efficiency[best]:.4%}, Q {metrics.q[best]:.1f})")
print(f"points with undefined DF near resonance: {np.count_nonzero(~defined)}")

# ----------------------------------------------------------------------
# Resonance estimates come from two independent signatures: the reactance
# zero crossing (interpolated between samples) and the |Z| minimum.

res = resonant_frequency(profile)
print(f"reactance crossing: {res.reactance_zero_hz / 1e9:.6f} GHz")
print(f"|Z| minimum:        {res.min_magnitude_hz / 1e9:.6f} GHz")

# ----------------------------------------------------------------------
# The usable band: the contiguous stretch around resonance where |Z|
# stays under a threshold, with linearly interpolated edges.

band = low_impedance_bandwidth(profile, 2.0)
lo, hi = band
print(f"|Z| < 2 ohm between {lo / 1e9:.4f} and {hi / 1e9:.4f} GHz "
      f"({(hi - lo) / 1e6:.1f} MHz wide)")

# ----------------------------------------------------------------------
# Or ask for everything at once.

report = metrics_report(profile, df_threshold=0.02, z_threshold_ohm=2.0)
print(f"fraction of sweep with DF below 2%: {report.fraction_df_below:.3f}")
print(f"resonant frequency used downstream: {report.resonant_frequency_hz / 1e9:.4f} GHz")
