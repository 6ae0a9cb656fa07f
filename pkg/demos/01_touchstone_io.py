"""
Reading and writing Touchstone network files
============================================

A round trip through the plain-text interchange format: build a small
two-port from an analytic model, serialize it in each encoding, parse it
back, and see what the validator says about a non-passive entry.
"""

import numpy as np

from slcap import (
    NetworkData,
    SeriesRlcModel,
    TouchstoneFormat,
    TouchstoneParseError,
    parse_touchstone,
    synthesize_series_rlc,
    validate_passivity,
    write_touchstone,
)

# ----------------------------------------------------------------------
# A concrete network to play with: a lossy series resonator swept through
# resonance, embedded in the series-through measurement fixture.

model = SeriesRlcModel(r_ohm=1.0, l_h=2e-9, c_f=1e-12)
f = np.linspace(0.5e9, 8e9, 16)
net = synthesize_series_rlc(model, f)
print("ports:", net.n_ports, " points:", net.n_points, " z0:", net.z0_ohm)

# ----------------------------------------------------------------------
# Serialize.  The option line records frequency unit, parameter kind,
# number encoding, and reference impedance; after it comes one row per
# frequency (S11 S21 S12 S22 for a two-port).

text = write_touchstone(net, TouchstoneFormat(unit="ghz", encoding="ma"))
print()
for line in text.splitlines()[:3]:
    print(line)
print("...")
print()

# ----------------------------------------------------------------------
# Parse it back.  Real/imaginary rows survive bit-exactly; the
# magnitude/angle and dB encodings round-trip to within float noise.

for encoding in ("ri", "ma", "db"):
    doc = write_touchstone(net, TouchstoneFormat(encoding=encoding))
    err = np.abs(parse_touchstone(doc).s - net.s).max()
    print(f"round-trip worst |S| error, {encoding:>2}: {err:.3e}")

# ----------------------------------------------------------------------
# Malformed documents are rejected with the line number and the cause,
# not with a stack trace from deep inside the numerics.  Frequencies must
# increase strictly, so swapping two rows is enough to trip it.

bad = "# GHz S MA R 50\n2.0 0.5 0\n1.0 0.5 0\n"
try:
    parse_touchstone(bad)
except TouchstoneParseError as exc:
    print()
    print("rejected:", exc)

# ----------------------------------------------------------------------
# The passivity screen names the offending entry and its frequency.
# Scale one transmission sample past unity and ask again.

s = net.s.copy()
s[3, 1, 0] *= 3.0
dubious = NetworkData(frequencies_hz=net.frequencies_hz, s=s, z0_ohm=net.z0_ohm)
print()
print("passivity flags on the doctored network:")
for line in validate_passivity(dubious):
    print(" ", line)
print("flags on the original:", validate_passivity(net))
