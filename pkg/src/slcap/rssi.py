"""Field-trial signal statistics: AT +CSQ log ingestion and dataset comparison.

Modem logs carry one reading per line, ``<ISO-8601 timestamp> +CSQ: <rssi>,<ber>``,
with ``#`` comment lines.  RSSI codes follow the GSM convention: 0..31 map
affinely to received power (dBm = -113 + 2 * rssi) and 99 means unknown.
Two datasets are compared with a Welch two-sample t-test plus the ratio and
footprint summaries used when trading a reference antenna against a compact one.
"""
from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from datetime import datetime

import numpy as np
from scipy import stats

__all__ = [
    "RSSI_UNKNOWN",
    "AtLogParseError",
    "RssiSample",
    "RssiDataset",
    "parse_at_csq_log",
    "parse_rssi_csv",
    "rssi_to_dbm",
    "dbm_to_rssi",
    "check_dbm_mapping",
    "WelchResult",
    "welch_t_test",
    "ComparisonReport",
    "compare_datasets",
    "format_p_value",
]

RSSI_UNKNOWN = 99
_DBM_OFFSET = -113.0
_DBM_STEP = 2.0

_CSQ_LINE = re.compile(r"^(?P<ts>.+?)\s+\+CSQ:\s*(?P<rssi>\d+)\s*,\s*(?P<ber>\d+)\s*$")


class AtLogParseError(ValueError):
    """Raised for malformed log content; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@dataclass(frozen=True)
class RssiSample:
    """One +CSQ reading.  ber is retained but unused by the statistics."""

    timestamp: datetime
    rssi: int
    ber: int

    def __post_init__(self):
        if not (0 <= self.rssi <= 31 or self.rssi == RSSI_UNKNOWN):
            raise ValueError(f"rssi {self.rssi} outside 0..31 / 99")
        if not (0 <= self.ber <= 7 or self.ber == RSSI_UNKNOWN):
            raise ValueError(f"ber {self.ber} outside 0..7 / 99")

    @property
    def known(self) -> bool:
        return self.rssi != RSSI_UNKNOWN


@dataclass
class RssiDataset:
    """A labelled series of readings from one antenna in one environment."""

    samples: list[RssiSample]
    environment: str = ""
    antenna: str = ""

    def known_rssi(self) -> np.ndarray:
        return np.array([s.rssi for s in self.samples if s.known], dtype=float)

    @property
    def n_samples(self) -> int:
        return len(self.samples)

    @property
    def n_known(self) -> int:
        return sum(1 for s in self.samples if s.known)


def _parse_timestamp(text: str, line_number: int) -> datetime:
    cleaned = text.strip()
    if cleaned.endswith(("Z", "z")):
        cleaned = cleaned[:-1] + "+00:00"
    try:
        return datetime.fromisoformat(cleaned)
    except ValueError:
        raise AtLogParseError(
            line_number, f"timestamp {text.strip()!r} is not ISO-8601"
        ) from None


def _make_sample(ts: datetime, rssi: int, ber: int, line_number: int) -> RssiSample:
    try:
        return RssiSample(timestamp=ts, rssi=rssi, ber=ber)
    except ValueError as exc:
        raise AtLogParseError(line_number, str(exc)) from None


def parse_at_csq_log(text: str, environment: str = "", antenna: str = "") -> RssiDataset:
    """Parse a raw modem log into a dataset.

    Blank lines and lines starting with ``#`` are skipped.  Anything else must
    match the +CSQ line grammar; violations raise :class:`AtLogParseError`
    with the line number.
    """
    samples = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _CSQ_LINE.match(line)
        if m is None:
            raise AtLogParseError(line_number, f"not a +CSQ reading: {line!r}")
        ts = _parse_timestamp(m.group("ts"), line_number)
        samples.append(
            _make_sample(ts, int(m.group("rssi")), int(m.group("ber")), line_number)
        )
    return RssiDataset(samples=samples, environment=environment, antenna=antenna)


def parse_rssi_csv(text: str, environment: str = "", antenna: str = "") -> RssiDataset:
    """Alternative CSV ingestion with exact header ``timestamp,rssi,ber``."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise AtLogParseError(1, "empty document") from None
    if header != ["timestamp", "rssi", "ber"]:
        raise AtLogParseError(1, f"expected header timestamp,rssi,ber; got {','.join(header)!r}")
    samples = []
    for line_number, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 3:
            raise AtLogParseError(line_number, f"expected 3 fields, got {len(row)}")
        ts = _parse_timestamp(row[0], line_number)
        try:
            rssi, ber = int(row[1]), int(row[2])
        except ValueError:
            raise AtLogParseError(line_number, "rssi and ber must be integers") from None
        samples.append(_make_sample(ts, rssi, ber, line_number))
    return RssiDataset(samples=samples, environment=environment, antenna=antenna)


def rssi_to_dbm(rssi: int) -> float:
    """GSM mapping dBm = -113 + 2 * rssi for codes 0..31; 99 (unknown) raises."""
    if rssi == RSSI_UNKNOWN:
        raise ValueError("rssi 99 encodes an unknown signal level")
    if not 0 <= rssi <= 31:
        raise ValueError(f"rssi {rssi} outside 0..31")
    return _DBM_OFFSET + _DBM_STEP * rssi


def dbm_to_rssi(dbm: float) -> int:
    """Inverse of :func:`rssi_to_dbm`; the level must sit exactly on the grid."""
    code = (dbm - _DBM_OFFSET) / _DBM_STEP
    rounded = round(code)
    if abs(code - rounded) > 1e-9 or not 0 <= rounded <= 31:
        raise ValueError(f"{dbm} dBm is not a valid rssi level")
    return int(rounded)


def check_dbm_mapping(claimed: list[tuple[int, float]]) -> list[str]:
    """Flag (rssi, dBm) pairs inconsistent with the affine GSM mapping.

    Returns one message per mismatching pair; an empty list means every
    claimed level sits on dBm = -113 + 2 * rssi.
    """
    flags = []
    for code, dbm in claimed:
        expected = rssi_to_dbm(code)
        if abs(dbm - expected) > 1e-9:
            flags.append(
                f"rssi {code}: claimed {dbm:g} dBm inconsistent with affine map "
                f"(expected {expected:g} dBm)"
            )
    return flags


@dataclass(frozen=True)
class WelchResult:
    """Welch two-sample t statistic, Welch-Satterthwaite df, two-sided p."""

    t: float
    df: float
    p_value: float


def welch_t_test(a, b) -> WelchResult:
    """Unequal-variance two-sample t-test (Welch).

    t = (mean_a - mean_b) / sqrt(s2_a/n_a + s2_b/n_b) with the
    Welch-Satterthwaite degrees of freedom; the two-sided p comes from the
    Student-t survival function.  Two zero-variance samples with equal means
    return t = 0, p = 1 by convention; with unequal means there is no valid
    test and a ValueError is raised.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size < 2 or b.size < 2:
        raise ValueError("each sample needs at least two values")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("samples must be finite")

    na, nb = a.size, b.size
    va, vb = a.var(ddof=1), b.var(ddof=1)
    diff = a.mean() - b.mean()
    if va == 0 and vb == 0:
        if diff == 0:
            return WelchResult(t=0.0, df=float(na + nb - 2), p_value=1.0)
        raise ValueError("both samples have zero variance but different means")

    se_a, se_b = va / na, vb / nb
    t = diff / math.sqrt(se_a + se_b)
    df = (se_a + se_b) ** 2 / (se_a**2 / (na - 1) + se_b**2 / (nb - 1))
    p = 2.0 * float(stats.t.sf(abs(t), df))
    return WelchResult(t=float(t), df=float(df), p_value=min(p, 1.0))


def format_p_value(p: float) -> str:
    """Display form: values below 1e-3 print as '< 0.001'."""
    if p < 1e-3:
        return "< 0.001"
    return f"{p:.4f}"


@dataclass
class ComparisonReport:
    """Summary statistics comparing a novel antenna's readings to a baseline's."""

    novel: RssiDataset
    baseline: RssiDataset
    novel_mean_rssi: float
    baseline_mean_rssi: float
    novel_sd_rssi: float
    baseline_sd_rssi: float
    novel_n_known: int
    baseline_n_known: int
    novel_mean_dbm: float
    baseline_mean_dbm: float
    percent_difference: float
    performance_ratio_rssi_pct: float
    performance_ratio_dbm_pct: float
    welch: WelchResult
    novel_area_mm2: float | None = None
    baseline_area_mm2: float | None = None
    footprint_ratio: float | None = None
    mapping_flags: list[str] = field(default_factory=list)

    def to_rows(self) -> list[tuple[str, str]]:
        """Key-value pairs in a fixed order, shared by the text and CSV emitters."""
        rows = [
            ("novel.environment", self.novel.environment),
            ("novel.antenna", self.novel.antenna),
            ("novel.n_samples", str(self.novel.n_samples)),
            ("novel.n_known", str(self.novel_n_known)),
            ("novel.mean_rssi", f"{self.novel_mean_rssi:.9g}"),
            ("novel.sd_rssi", f"{self.novel_sd_rssi:.9g}"),
            ("novel.mean_dbm", f"{self.novel_mean_dbm:.9g}"),
            ("baseline.environment", self.baseline.environment),
            ("baseline.antenna", self.baseline.antenna),
            ("baseline.n_samples", str(self.baseline.n_samples)),
            ("baseline.n_known", str(self.baseline_n_known)),
            ("baseline.mean_rssi", f"{self.baseline_mean_rssi:.9g}"),
            ("baseline.sd_rssi", f"{self.baseline_sd_rssi:.9g}"),
            ("baseline.mean_dbm", f"{self.baseline_mean_dbm:.9g}"),
            ("percent_difference", f"{self.percent_difference:.9g}"),
            ("performance_ratio_rssi_pct", f"{self.performance_ratio_rssi_pct:.9g}"),
            ("performance_ratio_dbm_pct", f"{self.performance_ratio_dbm_pct:.9g}"),
            ("welch.t", f"{self.welch.t:.9g}"),
            ("welch.df", f"{self.welch.df:.9g}"),
            ("welch.p_value", format_p_value(self.welch.p_value)),
        ]
        if self.footprint_ratio is not None:
            rows.append(("novel.area_mm2", f"{self.novel_area_mm2:.9g}"))
            rows.append(("baseline.area_mm2", f"{self.baseline_area_mm2:.9g}"))
            rows.append(("footprint_ratio", f"{self.footprint_ratio:.9g}"))
        for i, flag in enumerate(self.mapping_flags):
            rows.append((f"mapping_check.{i}", flag))
        return rows

    def to_text(self) -> str:
        return "\n".join(f"{key} = {value}" for key, value in self.to_rows()) + "\n"


def compare_datasets(
    novel: RssiDataset,
    baseline: RssiDataset,
    novel_area_mm2: float | None = None,
    baseline_area_mm2: float | None = None,
    claimed_dbm: list[tuple[int, float]] | None = None,
) -> ComparisonReport:
    """Compare two datasets on their known readings.

    The percent difference is baseline-relative,
    (mean_baseline - mean_novel) / mean_baseline * 100, and the performance
    ratios give the novel mean as a percentage of the baseline mean on both
    the RSSI and dBm scales (dBm means are negative, so a weaker novel signal
    shows a ratio above 100 there).  ``footprint_ratio`` =
    baseline_area / novel_area when both areas are supplied.  ``claimed_dbm``
    pairs are checked against the affine mapping and mismatches flagged in
    the report.
    """
    a = novel.known_rssi()
    b = baseline.known_rssi()
    if a.size < 2 or b.size < 2:
        raise ValueError("each dataset needs at least two known readings")
    if b.mean() == 0:
        raise ValueError("baseline mean is zero; ratios are undefined")

    welch = welch_t_test(a, b)
    mean_dbm_a = _DBM_OFFSET + _DBM_STEP * a.mean()
    mean_dbm_b = _DBM_OFFSET + _DBM_STEP * b.mean()

    footprint = None
    if novel_area_mm2 is not None and baseline_area_mm2 is not None:
        if novel_area_mm2 <= 0 or baseline_area_mm2 <= 0:
            raise ValueError("antenna areas must be positive")
        footprint = baseline_area_mm2 / novel_area_mm2

    return ComparisonReport(
        novel=novel,
        baseline=baseline,
        novel_mean_rssi=float(a.mean()),
        baseline_mean_rssi=float(b.mean()),
        novel_sd_rssi=float(a.std(ddof=1)),
        baseline_sd_rssi=float(b.std(ddof=1)),
        novel_n_known=a.size,
        baseline_n_known=b.size,
        novel_mean_dbm=mean_dbm_a,
        baseline_mean_dbm=mean_dbm_b,
        percent_difference=float((b.mean() - a.mean()) / b.mean() * 100.0),
        performance_ratio_rssi_pct=float(a.mean() / b.mean() * 100.0),
        performance_ratio_dbm_pct=float(mean_dbm_a / mean_dbm_b * 100.0),
        welch=welch,
        novel_area_mm2=novel_area_mm2,
        baseline_area_mm2=baseline_area_mm2,
        footprint_ratio=footprint,
        mapping_flags=check_dbm_mapping(claimed_dbm or []),
    )
