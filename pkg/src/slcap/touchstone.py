"""Touchstone v1 S-parameter reader/writer.

Handles 1- and 2-port files in the three standard encodings (real-imaginary,
magnitude-angle, dB-angle) with frequency units Hz/kHz/MHz/GHz.  Touchstone v2
keyword blocks are rejected.  Parsing is total over the documented grammar:
every input either yields a :class:`NetworkData` or raises
:class:`TouchstoneParseError` naming the offending line and cause.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NetworkData",
    "TouchstoneFormat",
    "TouchstoneParseError",
    "parse_touchstone",
    "write_touchstone",
    "validate_passivity",
]

UNIT_SCALE = {"hz": 1.0, "khz": 1e3, "mhz": 1e6, "ghz": 1e9}
_UNIT_DISPLAY = {"hz": "Hz", "khz": "kHz", "mhz": "MHz", "ghz": "GHz"}
ENCODINGS = ("ri", "ma", "db")
_PARAMETER_KINDS = ("s", "y", "z", "g", "h")

DEFAULT_Z0 = 50.0
PASSIVITY_TOL = 1e-9


class TouchstoneParseError(ValueError):
    """Raised for any input outside the accepted grammar; carries the line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@dataclass(frozen=True)
class TouchstoneFormat:
    """Serialization choices from (or for) an option line."""

    unit: str = "ghz"
    encoding: str = "ma"
    z0_ohm: float = DEFAULT_Z0

    def __post_init__(self):
        if self.unit not in UNIT_SCALE:
            raise ValueError(f"unknown frequency unit {self.unit!r}")
        if self.encoding not in ENCODINGS:
            raise ValueError(f"unknown encoding {self.encoding!r}")
        if not (self.z0_ohm > 0 and math.isfinite(self.z0_ohm)):
            raise ValueError("reference impedance must be positive and finite")


@dataclass
class NetworkData:
    """Frequency sweep of scattering matrices against a real reference impedance.

    ``s`` has shape (n_points, n_ports, n_ports) with ``s[k, i, j]`` holding
    S(i+1)(j+1) at ``frequencies_hz[k]``.  Only 1- and 2-port data is supported.
    """

    frequencies_hz: np.ndarray
    s: np.ndarray
    z0_ohm: float = DEFAULT_Z0

    def __post_init__(self):
        f = np.asarray(self.frequencies_hz, dtype=float)
        s = np.asarray(self.s, dtype=complex)
        if f.ndim != 1 or f.size == 0:
            raise ValueError("frequencies must be a non-empty 1-D array")
        if not np.all(np.isfinite(f)) or not np.all(f > 0):
            raise ValueError("frequencies must be finite and positive")
        if f.size > 1 and not np.all(np.diff(f) > 0):
            raise ValueError("frequencies must be strictly increasing")
        if s.ndim != 3 or s.shape[0] != f.size or s.shape[1] != s.shape[2]:
            raise ValueError("s must have shape (n_points, n_ports, n_ports)")
        if s.shape[1] not in (1, 2):
            raise ValueError("only 1- and 2-port networks are supported")
        if not np.all(np.isfinite(s)):
            raise ValueError("scattering parameters must be finite")
        if not (self.z0_ohm > 0 and math.isfinite(self.z0_ohm)):
            raise ValueError("reference impedance must be positive and finite")
        self.frequencies_hz = f
        self.s = s

    @property
    def n_points(self) -> int:
        return self.frequencies_hz.size

    @property
    def n_ports(self) -> int:
        return self.s.shape[1]

    def s11(self) -> np.ndarray:
        return self.s[:, 0, 0]

    def s21(self) -> np.ndarray:
        if self.n_ports < 2:
            raise ValueError("s21 requires a 2-port network")
        return self.s[:, 1, 0]


def _parse_option_line(line: str, line_number: int) -> TouchstoneFormat:
    tokens = line[1:].split()
    unit = encoding = None
    z0 = None
    kind = None
    i = 0
    while i < len(tokens):
        tok = tokens[i].lower()
        if tok in UNIT_SCALE:
            if unit is not None:
                raise TouchstoneParseError(line_number, "duplicate frequency unit token")
            unit = tok
        elif tok in ENCODINGS:
            if encoding is not None:
                raise TouchstoneParseError(line_number, "duplicate encoding token")
            encoding = tok
        elif tok in _PARAMETER_KINDS:
            if kind is not None:
                raise TouchstoneParseError(line_number, "duplicate parameter-kind token")
            kind = tok
        elif tok == "r":
            if z0 is not None:
                raise TouchstoneParseError(line_number, "duplicate reference-impedance token")
            if i + 1 >= len(tokens):
                raise TouchstoneParseError(line_number, "'R' token missing its impedance value")
            try:
                z0 = float(tokens[i + 1])
            except ValueError:
                raise TouchstoneParseError(
                    line_number, f"reference impedance {tokens[i + 1]!r} is not a number"
                ) from None
            if not (z0 > 0 and math.isfinite(z0)):
                raise TouchstoneParseError(line_number, "reference impedance must be positive")
            i += 1
        else:
            raise TouchstoneParseError(line_number, f"unknown option token {tokens[i]!r}")
        i += 1
    if kind is not None and kind != "s":
        raise TouchstoneParseError(
            line_number, f"parameter kind {kind.upper()!r} is not supported (scattering only)"
        )
    # Touchstone v1 defaults apply for any omitted token.
    return TouchstoneFormat(
        unit=unit or "ghz", encoding=encoding or "ma", z0_ohm=DEFAULT_Z0 if z0 is None else z0
    )


def _pair_to_complex(encoding: str, a: float, b: float) -> complex:
    if encoding == "ri":
        return complex(a, b)
    if encoding == "ma":
        mag, ang = a, math.radians(b)
    else:  # db
        mag, ang = 10.0 ** (a / 20.0), math.radians(b)
    return complex(mag * math.cos(ang), mag * math.sin(ang))


def parse_touchstone(text: str) -> NetworkData:
    """Parse a Touchstone v1 document into a :class:`NetworkData`.

    Raises
    ------
    TouchstoneParseError
        With a line number, for any deviation from the v1 grammar: v2 keyword
        blocks, malformed or duplicated option lines, unsupported parameter
        kinds, wrong column counts, non-numeric or non-finite values,
        non-positive or non-increasing frequencies, or missing data.
    """
    fmt: TouchstoneFormat | None = None
    freqs: list[float] = []
    matrices: list[list[complex]] = []
    n_cols = None
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.split("!", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            raise TouchstoneParseError(
                line_number, "Touchstone v2 keyword blocks are not supported"
            )
        if line.startswith("#"):
            if fmt is not None:
                raise TouchstoneParseError(line_number, "second option line")
            fmt = _parse_option_line(line, line_number)
            continue
        if fmt is None:
            raise TouchstoneParseError(line_number, "data row before the option line")

        tokens = line.split()
        values = []
        for tok in tokens:
            try:
                v = float(tok)
            except ValueError:
                raise TouchstoneParseError(
                    line_number, f"non-numeric token {tok!r}"
                ) from None
            if not math.isfinite(v):
                raise TouchstoneParseError(line_number, f"non-finite value {tok!r}")
            values.append(v)

        if n_cols is None:
            if len(values) not in (3, 9):
                raise TouchstoneParseError(
                    line_number,
                    f"expected 3 columns (1-port) or 9 columns (2-port), got {len(values)}",
                )
            n_cols = len(values)
        elif len(values) != n_cols:
            raise TouchstoneParseError(
                line_number, f"expected {n_cols} columns, got {len(values)}"
            )

        f_hz = values[0] * UNIT_SCALE[fmt.unit]
        if f_hz <= 0:
            raise TouchstoneParseError(line_number, "frequency must be positive")
        if freqs and f_hz <= freqs[-1]:
            raise TouchstoneParseError(line_number, "frequencies must be strictly increasing")
        freqs.append(f_hz)

        entries = [
            _pair_to_complex(fmt.encoding, values[k], values[k + 1])
            for k in range(1, len(values), 2)
        ]
        matrices.append(entries)

    if fmt is None:
        raise TouchstoneParseError(max(last_line, 1), "missing option line")
    if not freqs:
        raise TouchstoneParseError(max(last_line, 1), "no data rows")

    n = len(freqs)
    if n_cols == 3:
        s = np.array(matrices, dtype=complex).reshape(n, 1, 1)
    else:
        # v1 order for 2-port rows: S11 S21 S12 S22
        s = np.empty((n, 2, 2), dtype=complex)
        for k, (s11, s21, s12, s22) in enumerate(matrices):
            s[k, 0, 0] = s11
            s[k, 1, 0] = s21
            s[k, 0, 1] = s12
            s[k, 1, 1] = s22
    return NetworkData(frequencies_hz=np.array(freqs), s=s, z0_ohm=fmt.z0_ohm)


def _fmt_num(x: float) -> str:
    # repr() is the shortest string that round-trips the exact float value.
    return repr(float(x))


def _fmt_z0(z0: float) -> str:
    return str(int(z0)) if z0 == int(z0) else repr(float(z0))


def _entry_pair(encoding: str, value: complex) -> tuple[float, float]:
    if encoding == "ri":
        return value.real, value.imag
    mag = abs(value)
    ang = math.degrees(math.atan2(value.imag, value.real))
    if encoding == "ma":
        return mag, ang
    # dB of an exact zero has no finite representation; floor keeps the file
    # parseable and the reconstructed value indistinguishable from zero.
    return 20.0 * math.log10(max(mag, 1e-30)), ang


def write_touchstone(net: NetworkData, fmt: TouchstoneFormat | None = None) -> str:
    """Serialize ``net`` as a Touchstone v1 document in the requested format."""
    if fmt is None:
        fmt = TouchstoneFormat(z0_ohm=net.z0_ohm)
    scale = UNIT_SCALE[fmt.unit]
    lines = [f"# {_UNIT_DISPLAY[fmt.unit]} S {fmt.encoding.upper()} R {_fmt_z0(fmt.z0_ohm)}"]
    for k in range(net.n_points):
        row = [_fmt_num(net.frequencies_hz[k] / scale)]
        if net.n_ports == 1:
            order = [net.s[k, 0, 0]]
        else:
            order = [net.s[k, 0, 0], net.s[k, 1, 0], net.s[k, 0, 1], net.s[k, 1, 1]]
        for entry in order:
            a, b = _entry_pair(fmt.encoding, complex(entry))
            row.append(_fmt_num(a))
            row.append(_fmt_num(b))
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def validate_passivity(net: NetworkData, tol: float = PASSIVITY_TOL) -> list[str]:
    """Return a warning string per scattering entry with magnitude above 1 + tol."""
    warnings = []
    mags = np.abs(net.s)
    for k in range(net.n_points):
        for i in range(net.n_ports):
            for j in range(net.n_ports):
                if mags[k, i, j] > 1.0 + tol:
                    warnings.append(
                        f"|S{i + 1}{j + 1}| = {mags[k, i, j]:.9g} exceeds 1 "
                        f"at {net.frequencies_hz[k]:.9g} Hz"
                    )
    return warnings
